#!/usr/bin/env python3
"""Run the identity verification suite over the full parameter grid and print
one summary row per (r, l, field), with timings.

Usage: python3 scripts/run_verification_grid.py [--closure]
"""

import argparse
import sys
import time

from spweil.fields import FieldSpec, make_field
from spweil.generators import weil_generators
from spweil.operators import WeilParams
from spweil.symplectic import group_order
from spweil.verification import CapExceeded, closure_order, run_relation_suite

GRID = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1)]
CHAR2 = [(3, 1), (3, 2), (5, 1)]
CLOSURE_SETS = [(3, 1), (5, 1), (7, 1), (3, 2)]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--closure", action="store_true",
                        help="also run the group-order closure counts")
    args = parser.parse_args()

    failures = 0
    rows = [(kind, r, ell) for r, ell in GRID
            for kind in ("cyclotomic", "auto-prime")]
    rows += [("auto-char2", r, ell) for r, ell in CHAR2]
    grand = time.time()
    for kind, r, ell in rows:
        t0 = time.time()
        ctx = make_field(FieldSpec(kind, r))
        report = run_relation_suite(WeilParams(r, ell, ctx))
        status = "ok" if report.ok else "FAIL"
        nfail = len(report.failures())
        print(f"{status:4s} r={r:2d} l={ell} {ctx.describe():10s} "
              f"{len(report.entries):3d} checks, {nfail} failures "
              f"[{time.time() - t0:6.2f}s]")
        for f in report.failures():
            print(f"     {f.id}: {f.witness}")
        failures += nfail

    if args.closure:
        for r, ell in CLOSURE_SETS:
            t0 = time.time()
            ctx = make_field(FieldSpec("auto-prime", r))
            gens = weil_generators(WeilParams(r, ell, ctx))
            mats = [op.materialize() for _, _, _, op in gens.sp_generating_ops()]
            want = group_order(ell, r)
            try:
                got = closure_order(mats, want + 1)
            except CapExceeded as exc:
                print(f"FAIL r={r} l={ell} closure: {exc}")
                failures += 1
                continue
            status = "ok" if got == want else "FAIL"
            print(f"{status:4s} r={r:2d} l={ell} closure {got} "
                  f"(group order {want}) [{time.time() - t0:6.2f}s]")
            failures += got != want

    print(f"total {time.time() - grand:.1f}s, {failures} failing checks")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
