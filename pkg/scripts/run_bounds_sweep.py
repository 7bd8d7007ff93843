#!/usr/bin/env python3
"""Sweep the one-block family over a range of n: verify every instance
and confirm the closed-form twist/chi bounds against the realized
extremes.

Usage: python scripts/run_bounds_sweep.py [--max-n 10] [--lk]
"""

import argparse
import sys
import time

from planar_monoid.catalog import verify
from planar_monoid.designs import daisy
from planar_monoid.plumbing import bounds, chi_formulas, euler_characteristic


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--lk", action="store_true", help="run the second engine too (slower)")
    args = ap.parse_args()

    bad = 0
    for n in range(5, args.max_n + 1):
        rep = bounds(n)
        print(
            f"n={n}: twists [{rep.min_twists},{rep.max_twists}] "
            f"chi [{rep.min_chi},{rep.max_chi}]"
        )
        chis = []
        t0 = time.time()
        for i in range(2, n - 1):
            r = daisy(n, i)
            v = verify(r, lk=args.lk)
            lhs_chi = euler_characteristic(r.lhs)
            chis.append(lhs_chi)
            formula = chi_formulas(n, i)
            ok = v.verified and formula == (lhs_chi, euler_characteristic(r.rhs))
            bad += not ok
            mark = "ok " if ok else "FAIL"
            print(f"  {mark} i={i}: chi=({formula[0]},{formula[1]}) twists={r.lhs.twist_count()}")
        realized = min(chis) == rep.min_chi and max(chis) == rep.max_chi
        bad += not realized
        print(f"  extremes realized: {realized} ({time.time() - t0:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
