"""Exhaustively certify the A, B and D codecs for every rank the oracle allows.

    python scripts/certify_small_ranks.py [--budget 1000000] [--workers 4]
"""

import argparse
import time

from weylrank.oracle import DEFAULT_BUDGET, certify
from weylrank.number_system import group_order


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    print(f"{'group':>6} {'order':>9} {'result':>18} {'seconds':>8}")
    failed = 0
    for family in "ABD":
        n = 1
        while group_order(family, n) <= args.budget:
            t = time.perf_counter()
            report = certify(family, n, budget=args.budget, workers=args.workers)
            dt = time.perf_counter() - t
            print(f"{family + str(n):>6} {report.order:>9} {report.summary():>18} {dt:8.2f}")
            failed += not report.passed
            n += 1
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
