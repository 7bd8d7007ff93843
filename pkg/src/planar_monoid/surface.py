"""The n-holed sphere, convex curves, and positive twist products.

The surface is modeled as a disk with n-1 interior holes labeled 1..n-1 in
convex position; the disk boundary is component n.  Capping each interior
hole with a punctured disk turns a product of positive Dehn twists over
convex curves into a braid on n-1 strands, one strand per interior label.

A twist over a convex curve becomes a "swing": gather the support strands
into an adjacent block, apply the block full twist, undo the gathering.
The gathering side is a global convention (see _GATHER_SIGN); the linking
pattern of Dehn twists forces only the block twist's sign, and the catalog
of known relations pins the side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .braid import BraidWord, equals, full_twist

__all__ = [
    "SurfaceSpec",
    "ConvexCurve",
    "TwistWord",
    "BoundaryWord",
    "MultiplicityVector",
    "swing_word",
    "to_braid",
    "multiplicities",
    "equivalent",
]

# Sign of the crossings used while gathering support strands toward the
# minimal label.  Only one choice makes the catalog of known relations
# verify; the mirrored convention (+1) describes the reflected swing.
_GATHER_SIGN = -1


@dataclass(frozen=True)
class SurfaceSpec:
    """Sphere with n boundary components: interior labels 1..n-1, outer n."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 boundary components, got {self.n}")

    @property
    def interior_labels(self) -> range:
        return range(1, self.n)

    @property
    def strands(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class ConvexCurve:
    """A convex simple closed curve, named by the labels it encloses.

    Either a sorted tuple of interior labels, or the distinguished marker
    for a curve parallel to the outer boundary.  Boundary-parallel cases:
    a single label, the outer marker, or the full interior set (the last
    is isotopic to the outer-parallel curve).
    """

    support: tuple[int, ...] = ()
    outer: bool = False

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(sorted(self.support)))
        if self.outer:
            if self.support:
                raise ValueError("outer-parallel curve carries no support set")
        else:
            if not self.support:
                raise ValueError("curve needs a non-empty support")
            if len(set(self.support)) != len(self.support):
                raise ValueError(f"repeated labels in support {self.support}")
            if self.support[0] < 1:
                raise ValueError(f"labels must be positive, got {self.support}")

    @staticmethod
    def over(labels: Iterable[int]) -> "ConvexCurve":
        return ConvexCurve(support=tuple(labels))

    @staticmethod
    def outer_parallel() -> "ConvexCurve":
        return ConvexCurve(outer=True)

    def is_boundary_parallel(self, surface: SurfaceSpec) -> bool:
        return self.outer or len(self.support) == 1 or len(self.support) == surface.n - 1

    def json_factor(self):
        return "outer" if self.outer else list(self.support)

    @staticmethod
    def from_json_factor(obj) -> "ConvexCurve":
        if obj == "outer":
            return ConvexCurve.outer_parallel()
        return ConvexCurve.over(int(x) for x in obj)


@dataclass(frozen=True)
class TwistWord:
    """Product of positive twists, factors in written order.

    The last factor acts first, matching how composition of mapping
    classes is written.
    """

    surface: SurfaceSpec
    factors: tuple[ConvexCurve, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        top = self.surface.n - 1
        for c in self.factors:
            if not c.outer and (c.support[0] < 1 or c.support[-1] > top):
                raise ValueError(
                    f"support {c.support} exceeds interior labels 1..{top}"
                )

    def __len__(self) -> int:
        return len(self.factors)

    def to_json_obj(self) -> dict:
        return {"n": self.surface.n, "factors": [c.json_factor() for c in self.factors]}

    @staticmethod
    def from_json_obj(obj: dict) -> "TwistWord":
        surface = SurfaceSpec(int(obj["n"]))
        factors = tuple(ConvexCurve.from_json_factor(f) for f in obj["factors"])
        return TwistWord(surface, factors)


@dataclass(frozen=True)
class BoundaryWord:
    """Canonical boundary-parallel product T_1^{a_1} ... T_{n-1}^{a_{n-1}} T_n^outer."""

    surface: SurfaceSpec
    exponents: tuple[int, ...]
    outer: int = 1

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.surface.n - 1:
            raise ValueError(
                f"need {self.surface.n - 1} exponents, got {len(self.exponents)}"
            )
        if any(a < 0 for a in self.exponents) or self.outer < 0:
            raise ValueError("exponents must be non-negative")

    def expand(self) -> TwistWord:
        factors = []
        for label, a in enumerate(self.exponents, start=1):
            factors.extend([ConvexCurve.over([label])] * a)
        factors.extend([ConvexCurve.outer_parallel()] * self.outer)
        return TwistWord(self.surface, tuple(factors))

    def twist_count(self) -> int:
        return sum(self.exponents) + self.outer

    def to_json_obj(self) -> dict:
        return {
            "n": self.surface.n,
            "exponents": list(self.exponents),
            "outer": self.outer,
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "BoundaryWord":
        return BoundaryWord(
            SurfaceSpec(int(obj["n"])),
            tuple(int(a) for a in obj["exponents"]),
            int(obj.get("outer", 1)),
        )


@dataclass(frozen=True)
class MultiplicityVector:
    """Containment counts: interior[i-1] factors contain label i.

    The outer field counts factors isotopic to the outer boundary; it is
    reported alongside but never compared by the monoid equivalence test.
    """

    interior: tuple[int, ...]
    outer: int


def swing_word(curve: ConvexCurve, surface: SurfaceSpec) -> BraidWord:
    """Braid of one positive twist over a convex curve, on n-1 strands."""
    m = surface.n - 1
    if curve.outer:
        return full_twist(m)
    s = curve.support
    if s[-1] > m:
        raise ValueError(f"support {s} exceeds interior labels 1..{m}")
    k = len(s)
    if k == 1:
        return BraidWord(m)
    base = s[0]
    gather: list[int] = []
    for j in range(1, k):
        # walk the strand at slot s[j] left until it sits at slot base+j
        for pos in range(s[j] - 1, base + j - 1, -1):
            gather.append(_GATHER_SIGN * pos)
    block = [-(base + off) for off in range(k - 1)] * k
    ungather = [-x for x in reversed(gather)]
    return BraidWord(m, tuple(gather + block + ungather))


def to_braid(word: Union[TwistWord, BoundaryWord]) -> BraidWord:
    """Composition of the factor swings, in application order."""
    if isinstance(word, BoundaryWord):
        word = word.expand()
    letters: list[int] = []
    for curve in reversed(word.factors):
        letters.extend(swing_word(curve, word.surface).letters)
    return BraidWord(word.surface.n - 1, tuple(letters))


def multiplicities(word: Union[TwistWord, BoundaryWord]) -> MultiplicityVector:
    """How many factors contain each boundary component.

    Outer-parallel factors (marker or full interior support) contain every
    interior label and the outer component.
    """
    if isinstance(word, BoundaryWord):
        word = word.expand()
    n = word.surface.n
    counts = [0] * (n - 1)
    outer = 0
    for c in word.factors:
        if c.outer or len(c.support) == n - 1:
            outer += 1
            for i in range(n - 1):
                counts[i] += 1
        else:
            for label in c.support:
                counts[label - 1] += 1
    return MultiplicityVector(tuple(counts), outer)


def equivalent(w1: Union[TwistWord, BoundaryWord], w2: Union[TwistWord, BoundaryWord]) -> bool:
    """Monoid equality test: braids isotopic and interior multiplicities equal.

    Outer-parallel counts are deliberately not compared; see
    MultiplicityVector.
    """
    s1 = w1.surface
    s2 = w2.surface
    if s1.n != s2.n:
        raise ValueError(f"surfaces differ: n={s1.n} vs n={s2.n}")
    if multiplicities(w1).interior != multiplicities(w2).interior:
        return False
    return equals(to_braid(w1), to_braid(w2))
