#!/usr/bin/env python3
"""Tabulate the closed dimension formula against the spanning oracle.

Usage: python3 scripts/dimension_table.py [max_r] [--mod-p P]

Rank 5 with exact rationals is slow; pass --mod-p 1000003 to use the
modular oracle instead (the same answer with overwhelming probability,
and any disagreement would be caught by the exact run at lower rank).
"""

import argparse
import time

from nstl.nonstandard import (
    dimension_formula,
    dimension_formula_details,
    nonstandard_dimension_oracle,
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("max_r", type=int, nargs="?", default=4)
    ap.add_argument("--mod-p", type=int, default=None)
    args = ap.parse_args()
    print(f"{'r':>3} {'formula':>8} {'oracle':>8} {'time':>8}")
    for r in range(2, args.max_r + 1):
        t0 = time.time()
        kwargs = {"mod_p": args.mod_p} if args.mod_p else {}
        oracle = nonstandard_dimension_oracle(r, **kwargs)
        formula = dimension_formula(r)
        flag = "" if formula == oracle else "  DISAGREE"
        print(
            f"{r:>3} {formula:>8} {oracle:>8} {time.time() - t0:>7.1f}s"
            f"{flag}"
        )
        details = dimension_formula_details(r)
        per = ", ".join(
            f"{k}={v}" for k, v in sorted(details.items()) if k != "formula"
        )
        print(f"     {per}")


if __name__ == "__main__":
    main()
