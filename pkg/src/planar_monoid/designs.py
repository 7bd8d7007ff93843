"""Admissible curve collections as combinatorial designs.

A product of twists over non-boundary-parallel convex curves can only be
equivalent to a single-outer-twist boundary product if every pair of
interior labels is enclosed by exactly one factor (the linking matrix
forces this).  The factor supports therefore form a linear space on
m = n-1 points: blocks of size 2..m-1 covering every pair exactly once.

This module enumerates such designs up to symmetry, decides replication
feasibility, builds the generalized daisy relation, and searches block
orderings whose product realizes the full twist.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field

from .braid import NormalForm, full_twist, nf_mul, normal_form
from .surface import BoundaryWord, ConvexCurve, SurfaceSpec, TwistWord, swing_word

__all__ = [
    "Design",
    "ReplicationVector",
    "SymmetryMode",
    "PairCoverageError",
    "SearchBudget",
    "SearchResult",
    "from_rhs",
    "replication",
    "exponents_from_design",
    "enumerate_designs",
    "feasible_replication",
    "daisy",
    "search_orderings",
]

ReplicationVector = tuple[int, ...]

# symmetry reduction modes for enumeration
SYMMETRY_MODES = ("labeled", "dihedral", "symmetric")
SymmetryMode = str


class PairCoverageError(ValueError):
    """A pair of labels is enclosed by zero or several factors."""

    def __init__(self, x: int, y: int, count: int):
        self.x, self.y, self.count = x, y, count
        super().__init__(f"pair ({x},{y}) covered {count} times, need exactly 1")


@dataclass(frozen=True)
class Design:
    """Linear space on points 1..m: every pair in exactly one block."""

    points: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = self.points
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        cover: dict[tuple[int, int], int] = {}
        for b in blocks:
            if not 2 <= len(b) <= m - 1:
                raise ValueError(f"block {b} has size outside 2..{m - 1}")
            if b[0] < 1 or b[-1] > m or len(set(b)) != len(b):
                raise ValueError(f"block {b} is not a subset of 1..{m}")
            for x, y in itertools.combinations(b, 2):
                cover[(x, y)] = cover.get((x, y), 0) + 1
        for x in range(1, m + 1):
            for y in range(x + 1, m + 1):
                c = cover.get((x, y), 0)
                if c != 1:
                    raise PairCoverageError(x, y, c)

    def to_json_obj(self) -> dict:
        return {"m": self.points, "blocks": [list(b) for b in self.blocks]}

    @staticmethod
    def from_json_obj(obj: dict) -> "Design":
        return Design(int(obj["m"]), tuple(tuple(int(x) for x in b) for b in obj["blocks"]))


def from_rhs(word: TwistWord) -> Design:
    """Extract the design underlying an RHS twist word.

    Raises PairCoverageError when the supports cannot belong to any
    relation with a single outer twist, ValueError on boundary-parallel
    factors.
    """
    m = word.surface.n - 1
    for c in word.factors:
        if c.is_boundary_parallel(word.surface):
            raise ValueError(f"factor {c} is boundary-parallel")
    cover: dict[tuple[int, int], int] = {}
    for c in word.factors:
        for x, y in itertools.combinations(c.support, 2):
            cover[(x, y)] = cover.get((x, y), 0) + 1
    for x in range(1, m + 1):
        for y in range(x + 1, m + 1):
            c = cover.get((x, y), 0)
            if c != 1:
                raise PairCoverageError(x, y, c)
    return Design(m, tuple(c.support for c in word.factors))


def replication(d: Design) -> ReplicationVector:
    """Number of blocks containing each point."""
    counts = [0] * d.points
    for b in d.blocks:
        for x in b:
            counts[x - 1] += 1
    return tuple(counts)


def exponents_from_design(d: Design) -> BoundaryWord:
    """The unique boundary product with matching interior multiplicities."""
    r = replication(d)
    return BoundaryWord(SurfaceSpec(d.points + 1), tuple(x - 1 for x in r), outer=1)


# ---------------------------------------------------------------------------
# exhaustive enumeration (exact cover over the pair columns)

def _cover_all(m: int) -> list[tuple[tuple[int, ...], ...]]:
    """All labeled designs on m points, as sorted block tuples."""
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    rows: dict[tuple[int, ...], tuple[tuple[int, int], ...]] = {}
    for size in range(2, m):
        for subset in itertools.combinations(range(1, m + 1), size):
            rows[subset] = tuple(itertools.combinations(subset, 2))
    cols: dict[tuple[int, int], set[tuple[int, ...]]] = {p: set() for p in pairs}
    for row, covered in rows.items():
        for p in covered:
            cols[p].add(row)

    out: list[tuple[tuple[int, ...], ...]] = []
    partial: list[tuple[int, ...]] = []

    def _select(row):
        removed = []
        for j in rows[row]:
            for other in cols[j]:
                for k in rows[other]:
                    if k != j:
                        cols[k].remove(other)
            removed.append(cols.pop(j))
        return removed

    def _deselect(row, removed):
        for j in reversed(rows[row]):
            cols[j] = removed.pop()
            for other in cols[j]:
                for k in rows[other]:
                    if k != j:
                        cols[k].add(other)

    def _walk():
        if not cols:
            out.append(tuple(sorted(partial)))
            return
        col = min(cols, key=lambda c: (len(cols[c]), c))
        if not cols[col]:
            return
        for row in sorted(cols[col]):
            partial.append(row)
            removed = _select(row)
            _walk()
            _deselect(row, removed)
            partial.pop()

    _walk()
    return out


@functools.cache
def _labeled_block_sets(m: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    if not 3 <= m <= 7:
        raise ValueError(f"enumeration supported for 3 <= m <= 7, got {m}")
    return tuple(_cover_all(m))


def _group_perms(m: int, mode: SymmetryMode) -> list[tuple[int, ...]]:
    if mode == "labeled":
        return [tuple(range(1, m + 1))]
    if mode == "dihedral":
        perms = []
        for k in range(m):
            perms.append(tuple((x + k) % m + 1 for x in range(m)))
            perms.append(tuple((k - x) % m + 1 for x in range(m)))
        return perms
    if mode == "symmetric":
        return [tuple(p) for p in itertools.permutations(range(1, m + 1))]
    raise ValueError(f"unknown symmetry mode {mode!r}, want one of {SYMMETRY_MODES}")


def _relabel(perm: tuple[int, ...], blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(perm[x - 1] for x in b)) for b in blocks))


def enumerate_designs(m: int, mode: SymmetryMode = "dihedral") -> list[Design]:
    """All designs on m points, one canonical representative per orbit.

    Modes: "labeled" (no reduction), "dihedral" (the 2m isometries of the
    convex arrangement), "symmetric" (all m! relabelings).
    """
    group = _group_perms(m, mode)
    seen: set[tuple] = set()
    reps: list[tuple] = []
    for sol in _labeled_block_sets(m):
        if sol in seen:
            continue
        orbit = {_relabel(g, sol) for g in group}
        seen |= orbit
        reps.append(min(orbit))
    return [Design(m, blocks) for blocks in sorted(reps)]


# keep the contract name available too; the module never uses the builtin
enumerate = enumerate_designs


@functools.cache
def _replication_multisets(m: int) -> frozenset[tuple[int, ...]]:
    out = set()
    for sol in _labeled_block_sets(m):
        counts = [0] * m
        for b in sol:
            for x in b:
                counts[x - 1] += 1
        out.add(tuple(sorted(counts)))
    return frozenset(out)


def feasible_replication(m: int, r: ReplicationVector) -> bool:
    """True iff some design on m points has exactly this replication vector."""
    if len(r) != m:
        raise ValueError(f"replication vector length {len(r)} != {m} points")
    if m < 3:
        return False
    return tuple(sorted(r)) in _replication_multisets(m)


# ---------------------------------------------------------------------------
# the generalized daisy relation

def daisy(n: int, i: int):
    """The generalized daisy relation on the n-holed sphere, split at i.

    LHS: a_1..a_i = n-i-1, a_{i+1}..a_{n-1} = n-3, one outer twist.
    RHS (written order): one twist over {1..i}, then for each j > i the
    pair twists {j,j-1}, {j,j-2}, ..., {j,1}.  The n=4, i=2 instance is
    the lantern relation.
    """
    from .catalog import Relation  # deferred: catalog builds on designs

    if n < 4 or not 2 <= i < n - 1:
        raise ValueError(f"need n >= 4 and 2 <= i < n-1, got n={n}, i={i}")
    surface = SurfaceSpec(n)
    lhs = BoundaryWord(surface, tuple([n - i - 1] * i + [n - 3] * (n - 1 - i)), outer=1)
    factors = [ConvexCurve.over(range(1, i + 1))]
    for j in range(i + 1, n):
        for l in range(j - 1, 0, -1):
            factors.append(ConvexCurve.over([l, j]))
    rhs = TwistWord(surface, tuple(factors))
    return Relation(label=f"daisy({n},{i})", lhs=lhs, rhs=rhs)


# ---------------------------------------------------------------------------
# ordering search

@dataclass(frozen=True)
class SearchBudget:
    """Limits for search_orderings.

    exhaustive_cap: max block count for the complete DFS; above it the
    search degrades to seeds plus random shuffles and the result's status
    says so.
    """

    exhaustive_cap: int = 8
    tries: int = 2000
    seed: int = 0
    seeds: tuple[tuple[tuple[int, ...], ...], ...] = ()


@dataclass(frozen=True)
class SearchResult:
    """Orderings of a design's blocks realizing the full twist.

    status "exhausted": orderings is the complete list; empty means a
    proof of non-realizability.  status "budget": incomplete search;
    empty means only that nothing was found.
    """

    design: Design
    orderings: tuple[tuple[tuple[int, ...], ...], ...]
    status: str

    def realizable(self) -> bool:
        return bool(self.orderings)

    def to_json_obj(self) -> dict:
        return {
            "design": self.design.to_json_obj(),
            "orderings_found": len(self.orderings),
            "status": self.status,
        }


def _block_nf(m: int, block: tuple[int, ...]) -> NormalForm:
    surface = SurfaceSpec(m + 1)
    return normal_form(swing_word(ConvexCurve.over(block), surface))


def search_orderings(d: Design, budget: SearchBudget = SearchBudget()) -> SearchResult:
    """Find block orderings whose twist product equals the full twist.

    Orderings are reported in written order (last block applied first).
    Up to budget.exhaustive_cap blocks the DFS with normal-form
    memoization is complete; beyond that, seed orderings are checked and
    random shuffles tried.
    """
    m = d.points
    target = normal_form(full_twist(m))
    nf_of = {b: _block_nf(m, b) for b in d.blocks}
    identity = NormalForm(m, 0, ())

    def product_nf(application_order) -> NormalForm:
        acc = identity
        for b in application_order:
            acc = nf_mul(acc, nf_of[b])
        return acc

    if len(d.blocks) <= budget.exhaustive_cap:
        # memo: (remaining blocks, partial-product NF) -> all completing suffixes
        memo: dict[tuple[frozenset, NormalForm], tuple] = {}

        def complete(remaining: frozenset, acc: NormalForm):
            if not remaining:
                return ((),) if acc == target else ()
            key = (remaining, acc)
            hit = memo.get(key)
            if hit is None:
                found = []
                for b in sorted(remaining):
                    for suffix in complete(remaining - {b}, nf_mul(acc, nf_of[b])):
                        found.append((b,) + suffix)
                hit = tuple(found)
                memo[key] = hit
            return hit

        sequences = complete(frozenset(d.blocks), identity)
        orderings = tuple(sorted(tuple(reversed(seq)) for seq in sequences))
        return SearchResult(d, orderings, "exhausted")

    found: set[tuple[tuple[int, ...], ...]] = set()
    block_set = sorted(d.blocks)
    for ordering in budget.seeds:
        if sorted(ordering) != block_set:
            continue
        if product_nf(tuple(reversed(ordering))) == target:
            found.add(tuple(ordering))
    rng = random.Random(budget.seed)
    shuffled = list(d.blocks)
    for _ in range(budget.tries):
        rng.shuffle(shuffled)
        if product_nf(tuple(shuffled)) == target:
            found.add(tuple(reversed(shuffled)))
    return SearchResult(d, tuple(sorted(found)), "budget")
