"""Exact Laurent polynomials in two variables q, t with integer coefficients.

Terms are stored sparsely as a map (q_degree, t_degree) -> coefficient with
no zero coefficients kept, so equality is plain dict equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly2:
    """An element of Z[q, q^-1, t, t^-1]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[(int(key[0]), int(key[1]))] = int(coeff)
        self.terms = clean

    @staticmethod
    def monomial(coeff: int, qdeg: int = 0, tdeg: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(qdeg, tdeg): coeff})

    @staticmethod
    def zero() -> "LaurentPoly2":
        return LaurentPoly2()

    @staticmethod
    def one() -> "LaurentPoly2":
        return LaurentPoly2({(0, 0): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly2):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        other = _coerce(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key, 0) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = out
        return result

    def __neg__(self) -> "LaurentPoly2":
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = {key: -coeff for key, coeff in self.terms.items()}
        return result

    def __sub__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        return self + (-_coerce(other))

    def __mul__(self, other: "LaurentPoly2 | int") -> "LaurentPoly2":
        other = _coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                key = (qa + qb, ta + tb)
                new = out.get(key, 0) + ca * cb
                if new:
                    out[key] = new
                else:
                    del out[key]
        result = LaurentPoly2.__new__(LaurentPoly2)
        result.terms = out
        return result

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "LaurentPoly2":
        if exp < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            ((qd, td), coeff), = self.terms.items()
            if coeff not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            base = LaurentPoly2({(-qd, -td): coeff})
            return base ** (-exp)
        acc = LaurentPoly2.one()
        for _ in range(exp):
            acc = acc * self
        return acc

    def inverse(self) -> "LaurentPoly2":
        """Inverse of a unit monomial +-q^a t^b."""
        return self ** -1

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (qd, td) in sorted(self.terms):
            coeff = self.terms[(qd, td)]
            body = "".join(_var("q", qd) + _var("t", td))
            if body:
                if coeff == 1:
                    parts.append(body)
                elif coeff == -1:
                    parts.append("-" + body)
                else:
                    parts.append(f"{coeff}*{body}")
            else:
                parts.append(str(coeff))
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out


def _var(name: str, deg: int) -> Iterable[str]:
    if deg == 0:
        return ()
    if deg == 1:
        return (name,)
    return (f"{name}^{deg}",)


def _coerce(value: "LaurentPoly2 | int") -> LaurentPoly2:
    if isinstance(value, LaurentPoly2):
        return value
    return LaurentPoly2({(0, 0): value})
