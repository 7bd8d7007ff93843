"""Built-in relation catalog, verification reports, and completeness audits.

The relations live as JSON data files so a transcription question is a
diff, not a code read.  Verification always runs the combinatorial check
(multiplicities) and the Garside engine; the Lawrence-Krammer pass is a
second, independent engine whose only job is to catch a bug in the first.
"""

from __future__ import annotations

import functools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .braid import equals, lk_equal
from .designs import (
    Design,
    SearchBudget,
    _group_perms,
    _relabel,
    enumerate_designs,
    exponents_from_design,
    from_rhs,
    replication,
    search_orderings,
)
from .plumbing import euler_characteristic
from .surface import BoundaryWord, TwistWord, multiplicities, to_braid

__all__ = [
    "Relation",
    "VerificationReport",
    "AuditEntry",
    "ReplicationClassSummary",
    "AuditReport",
    "ChiRecord",
    "builtin",
    "verify",
    "verify_words",
    "verify_all",
    "completeness_check",
    "chi_discrepancies",
]


@dataclass(frozen=True)
class Relation:
    """One catalogued equality: boundary product = twist product."""

    label: str
    lhs: BoundaryWord
    rhs: TwistWord
    expected: bool = True

    def __post_init__(self):
        if self.lhs.surface != self.rhs.surface:
            raise ValueError("lhs and rhs must live on the same surface")
        for c in self.rhs.factors:
            if c.is_boundary_parallel(self.rhs.surface):
                raise ValueError(f"rhs factor {c.support} is boundary-parallel")


@dataclass(frozen=True)
class VerificationReport:
    label: str
    braid_equal: bool
    multiplicities_equal: bool
    lhs_chi: int
    rhs_chi: int
    oracle_agreement: Optional[bool]  # None when the LK pass was skipped
    lhs_outer: int
    rhs_outer: int

    @property
    def verified(self) -> bool:
        return self.braid_equal and self.multiplicities_equal

    @property
    def outer_mismatch(self) -> bool:
        # reported, not part of `verified`: the braid check subsumes it
        return self.lhs_outer != self.rhs_outer

    def to_json_obj(self) -> dict:
        return {
            "label": self.label,
            "verified": self.verified,
            "braid_equal": self.braid_equal,
            "multiplicities_equal": self.multiplicities_equal,
            "lhs_chi": self.lhs_chi,
            "rhs_chi": self.rhs_chi,
            "oracle_agreement": self.oracle_agreement,
            "lhs_outer": self.lhs_outer,
            "rhs_outer": self.rhs_outer,
            "outer_mismatch": self.outer_mismatch,
        }


def _data_text(name: str) -> str:
    return resources.files("planar_monoid").joinpath("data", name).read_text()


@functools.cache
def _builtin(n: int) -> tuple[Relation, ...]:
    obj = json.loads(_data_text(f"relations_n{n}.json"))
    rels = []
    for entry in obj["relations"]:
        rels.append(
            Relation(
                label=entry["label"],
                lhs=BoundaryWord.from_json_obj(entry["lhs"]),
                rhs=TwistWord.from_json_obj(entry["rhs"]),
            )
        )
    return tuple(rels)


def builtin(n: int) -> list[Relation]:
    """The catalogued relations for n in {5, 6, 7}: 2, 7, and 16 of them."""
    if n not in (5, 6, 7):
        raise ValueError(f"no builtin catalog for n={n}")
    return list(_builtin(n))


def verify_words(
    label: str, lhs: BoundaryWord, rhs: TwistWord, lk: bool = True
) -> VerificationReport:
    """Check an lhs/rhs pair end to end, without Relation's factor rules.

    Failures are report states, never exceptions.  oracle_agreement says
    whether the Lawrence-Krammer engine reached the same yes/no as the
    Garside engine (None when lk=False).
    """
    ml = multiplicities(lhs)
    mr = multiplicities(rhs)
    bl = to_braid(lhs)
    br = to_braid(rhs)
    braid_ok = equals(bl, br)
    agreement = (lk_equal(bl, br) == braid_ok) if lk else None
    return VerificationReport(
        label=label,
        braid_equal=braid_ok,
        multiplicities_equal=ml.interior == mr.interior,
        lhs_chi=euler_characteristic(lhs),
        rhs_chi=euler_characteristic(rhs),
        oracle_agreement=agreement,
        lhs_outer=ml.outer,
        rhs_outer=mr.outer,
    )


def verify(r: Relation, lk: bool = True) -> VerificationReport:
    """Check one catalogued relation; see verify_words."""
    return verify_words(r.label, r.lhs, r.rhs, lk=lk)


def _verify_task(args: tuple[Relation, bool]) -> VerificationReport:
    return verify(args[0], lk=args[1])


def default_jobs() -> int:
    env = os.environ.get("PLANAR_MONOID_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def verify_all(
    relations: Sequence[Relation], lk: bool = True, jobs: Optional[int] = None
) -> list[VerificationReport]:
    """Verify a batch; reports come back in input order regardless of jobs."""
    if jobs is None:
        jobs = default_jobs()
    work = [(r, lk) for r in relations]
    if jobs <= 1 or len(work) <= 1:
        return [_verify_task(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_task, work))


# ---------------------------------------------------------------------------
# completeness audits

@dataclass(frozen=True)
class AuditEntry:
    """Search outcome for one design class.

    matches_catalog compares "the class is realizable" with "the catalog
    contains a relation of this class"; when status is "budget" a False
    can mean the search was simply too small.  class_realizable may be
    True with orderings_found == 0: a catalog member exhibits the class
    through its own labelling even when no ordering of this particular
    representative was found (relabelings outside the dihedral group do
    not preserve relations).
    """

    design: Design
    exponents: tuple[int, ...]
    orderings_found: int
    status: str
    matches_catalog: bool
    replications: tuple[int, ...]
    catalog_labels: tuple[str, ...]
    class_realizable: bool

    def to_json_obj(self) -> dict:
        return {
            "design": self.design.to_json_obj(),
            "exponents": list(self.exponents),
            "orderings_found": self.orderings_found,
            "status": self.status,
            "matches_catalog": self.matches_catalog,
        }


@dataclass(frozen=True)
class ReplicationClassSummary:
    """One replication multiset: its chi pair and the audit outcome."""

    replications: tuple[int, ...]
    lhs_chi: int
    rhs_chi: int
    realizable: bool
    statuses: tuple[str, ...]
    in_catalog: bool
    listed: bool  # appears in the bundled printed-chi table

    def to_json_obj(self) -> dict:
        return {
            "replications": list(self.replications),
            "lhs_chi": self.lhs_chi,
            "rhs_chi": self.rhs_chi,
            "realizable": self.realizable,
            "statuses": list(self.statuses),
            "in_catalog": self.in_catalog,
            "listed": self.listed,
        }


@dataclass(frozen=True)
class AuditReport:
    n: int
    mode: str
    entries: tuple[AuditEntry, ...]
    replication_classes: tuple[ReplicationClassSummary, ...]

    def all_match(self) -> bool:
        return all(e.matches_catalog for e in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "entries": [e.to_json_obj() for e in self.entries],
            "replication_classes": [c.to_json_obj() for c in self.replication_classes],
        }


@functools.cache
def _printed_chi() -> dict:
    return json.loads(_data_text("printed_chi.json"))


def completeness_check(
    n: int, mode: str = "dihedral", budget: SearchBudget = SearchBudget()
) -> AuditReport:
    """Enumerate design classes at m = n-1 and search each for realizability.

    Classes containing a catalogued relation are seeded with that
    relation's written ordering (relabeled onto the canonical
    representative), so realizability there never hinges on the random
    budget.  Replication-class summaries compare against the bundled
    printed-chi table for this n.
    """
    if n not in (5, 6, 7):
        raise ValueError(f"no catalog to audit against for n={n}")
    m = n - 1
    group = _group_perms(m, mode)

    by_rep: dict[tuple[tuple[int, ...], ...], list[Relation]] = {}
    for r in builtin(n):
        d = from_rhs(r.rhs)
        rep = min(_relabel(g, d.blocks) for g in group)
        by_rep.setdefault(rep, []).append(r)

    entries = []
    for d in enumerate_designs(m, mode):
        members = by_rep.get(d.blocks, [])
        # Candidate seeds: every relabeling of a member's written ordering
        # that lands on this representative.  Only disk symmetries are
        # guaranteed to preserve relations, so beyond dihedral mode these
        # are guesses; search_orderings verifies each and keeps the true
        # ones.
        seeds = []
        for r in members:
            db = from_rhs(r.rhs)
            for g in group:
                if _relabel(g, db.blocks) == d.blocks:
                    s = tuple(
                        tuple(sorted(g[x - 1] for x in c.support)) for c in r.rhs.factors
                    )
                    if s not in seeds:
                        seeds.append(s)
        b = budget
        if seeds:
            b = SearchBudget(
                exhaustive_cap=budget.exhaustive_cap,
                tries=budget.tries,
                seed=budget.seed,
                seeds=tuple(seeds) + tuple(budget.seeds),
            )
        res = search_orderings(d, b)
        # A member's own written word realizes its own (orbit-mate) design,
        # so the class is realizable even when this representative's search
        # comes up empty.
        witness = bool(res.orderings) or any(
            verify(r, lk=False).verified for r in members
        )
        entries.append(
            AuditEntry(
                design=d,
                exponents=exponents_from_design(d).exponents,
                orderings_found=len(res.orderings),
                status=res.status,
                matches_catalog=witness == bool(members),
                replications=tuple(sorted(replication(d))),
                catalog_labels=tuple(r.label for r in members),
                class_realizable=witness,
            )
        )

    printed = {tuple(rec["replications"]) for rec in _printed_chi()[str(n)]}
    classes = []
    for reps in sorted({e.replications for e in entries}):
        cls = [e for e in entries if e.replications == reps]
        lhs_chi = 2 - n + sum(r - 1 for r in reps) + 1
        rhs_chi = 2 - n + len(cls[0].design.blocks)
        classes.append(
            ReplicationClassSummary(
                replications=reps,
                lhs_chi=lhs_chi,
                rhs_chi=rhs_chi,
                realizable=any(e.class_realizable for e in cls),
                statuses=tuple(sorted({e.status for e in cls})),
                in_catalog=any(e.catalog_labels for e in cls),
                listed=reps in printed,
            )
        )

    return AuditReport(n=n, mode=mode, entries=tuple(entries), replication_classes=tuple(classes))


# ---------------------------------------------------------------------------
# printed-vs-formula chi bookkeeping

@dataclass(frozen=True)
class ChiRecord:
    n: int
    replications: tuple[int, ...]
    printed: tuple[int, int]
    computed: tuple[int, int]

    @property
    def agree(self) -> bool:
        return self.printed == self.computed

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "replications": list(self.replications),
            "printed": list(self.printed),
            "computed": list(self.computed),
            "agree": self.agree,
        }


@functools.cache
def _class_block_counts(m: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for d in enumerate_designs(m, "symmetric"):
        out[tuple(sorted(replication(d)))] = len(d.blocks)
    return out


def chi_discrepancies() -> list[ChiRecord]:
    """Every chi pair in the bundled printed table, next to the 2-n+k value.

    The formula is the oracle of record; disagreements are flagged via
    .agree, never silently corrected in the data.
    """
    records = []
    for n_str, recs in sorted(_printed_chi().items()):
        n = int(n_str)
        counts = _class_block_counts(n - 1)
        for rec in recs:
            reps = tuple(rec["replications"])
            lhs_chi = 2 - n + sum(r - 1 for r in reps) + 1
            rhs_chi = 2 - n + counts[reps]
            records.append(
                ChiRecord(
                    n=n,
                    replications=reps,
                    printed=tuple(rec["printed"]),
                    computed=(lhs_chi, rhs_chi),
                )
            )
    return records
