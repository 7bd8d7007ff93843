"""Command-line front end: parse files, dispatch, print JSON, exit honestly.

Exit codes: 0 success (for `verify`/`catalog`: everything verified),
1 falsified, 2 bad arguments or unreadable input.  Reports go to stdout
as JSON with sorted keys; anything human-facing goes to stderr.

Relation files are JSON objects:

    {"n": 5,
     "lhs": {"exponents": [2, 2, 2, 2], "outer": 1},
     "rhs": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
     "order": "rightmost-first"}

`order` describes the rhs factor list: "rightmost-first" (default) is
function notation, the last factor acts first; "leftmost-first" files
are reversed at parse time.  A factor may be the string "outer" for the
outer-parallel twist.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import builtin, verify_all, verify_words
from .designs import Design, SearchBudget, enumerate_designs, search_orderings
from .plumbing import bounds, emit, plumbing_of
from .surface import BoundaryWord, TwistWord

_ORDERS = ("rightmost-first", "leftmost-first")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _parse_relation_file(obj: dict, fallback_label: str):
    """RelationFile -> (label, BoundaryWord, TwistWord or None)."""
    n = int(obj["n"])
    lhs_obj = dict(obj["lhs"])
    lhs_obj.setdefault("n", n)
    lhs = BoundaryWord.from_json_obj(lhs_obj)
    rhs = None
    if "rhs" in obj:
        order = obj.get("order", "rightmost-first")
        if order not in _ORDERS:
            raise ValueError(f"order must be one of {_ORDERS}, got {order!r}")
        factors = list(obj["rhs"])
        if order == "leftmost-first":
            factors.reverse()
        rhs = TwistWord.from_json_obj({"n": n, "factors": factors})
    return str(obj.get("label", fallback_label)), lhs, rhs


def _cmd_verify(args) -> int:
    label, lhs, rhs = _parse_relation_file(_load_json(args.path), Path(args.path).stem)
    if rhs is None:
        raise ValueError("relation file has no rhs")
    report = verify_words(label, lhs, rhs, lk=not args.fast)
    _emit_json(report.to_json_obj())
    return 0 if report.verified else 1


def _cmd_catalog(args) -> int:
    reports = verify_all(builtin(args.n), lk=not args.fast, jobs=args.jobs)
    ok = sum(r.verified for r in reports)
    _emit_json(
        {
            "n": args.n,
            "total": len(reports),
            "verified": ok,
            "relations": [r.to_json_obj() for r in reports],
        }
    )
    print(f"{ok}/{len(reports)} verified", file=sys.stderr)
    return 0 if ok == len(reports) else 1


def _cmd_enumerate(args) -> int:
    designs = enumerate_designs(args.m, args.sym)
    _emit_json(
        {
            "m": args.m,
            "mode": args.sym,
            "count": len(designs),
            "designs": [d.to_json_obj() for d in designs],
        }
    )
    return 0


def _cmd_search(args) -> int:
    d = Design.from_json_obj(_load_json(args.design))
    budget = SearchBudget(exhaustive_cap=args.cap, tries=args.tries, seed=args.seed)
    res = search_orderings(d, budget)
    obj = res.to_json_obj()
    obj["orderings"] = [[list(b) for b in o] for o in res.orderings]
    _emit_json(obj)
    return 0


def _cmd_plumb(args) -> int:
    _, lhs, _ = _parse_relation_file(_load_json(args.file), Path(args.file).stem)
    sys.stdout.write(emit(plumbing_of(lhs), fmt=args.format))
    return 0


def _cmd_bounds(args) -> int:
    rep = bounds(args.n)
    _emit_json(
        {
            "n": rep.n,
            "min_twists": rep.min_twists,
            "max_twists": rep.max_twists,
            "min_chi": rep.min_chi,
            "max_chi": rep.max_chi,
        }
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="planar-monoid",
        description="Twist relations on the holed sphere: verify, enumerate, search.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="check one relation file")
    v.add_argument("path", help="JSON relation file")
    v.add_argument("--fast", action="store_true", help="skip the second engine")
    v.set_defaults(fn=_cmd_verify)

    c = sub.add_parser("catalog", help="verify the builtin relations for one n")
    c.add_argument("--n", type=int, required=True, choices=(5, 6, 7))
    c.add_argument("--fast", action="store_true", help="skip the second engine")
    c.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker processes (default: PLANAR_MONOID_JOBS or all cores)",
    )
    c.set_defaults(fn=_cmd_catalog)

    e = sub.add_parser("enumerate", help="list design classes on m points")
    e.add_argument("--m", type=int, required=True)
    e.add_argument(
        "--sym",
        choices=("labeled", "dihedral", "symmetric"),
        default="dihedral",
        help="relabeling group for class reduction",
    )
    e.set_defaults(fn=_cmd_enumerate)

    s = sub.add_parser("search", help="search block orderings realizing the full twist")
    s.add_argument("--design", required=True, help="JSON design file {m, blocks}")
    s.add_argument("--cap", type=int, default=8, help="max blocks for exhaustive search")
    s.add_argument("--tries", type=int, default=2000, help="random shuffles past the cap")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=_cmd_search)

    g = sub.add_parser("plumb", help="plumbing graph of a relation file's lhs")
    g.add_argument("--file", required=True, help="JSON relation file")
    g.add_argument("--format", choices=("json", "dot"), default="json")
    g.set_defaults(fn=_cmd_plumb)

    b = sub.add_parser("bounds", help="twist-count and chi bounds for one n")
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(fn=_cmd_bounds)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
