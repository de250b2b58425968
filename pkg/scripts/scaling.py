"""Time D-type encode/decode as the rank grows.

Division steps per decode should equal n - 1; wall time grows faster than
linearly because each step divides a big integer.

    python scripts/scaling.py [--ranks 10 100 1000 3000] [--iterations 5]
"""

import argparse
import random
import time

from weylrank.codec import decode_d, encode_d
from weylrank.number_system import ConversionStats, group_order


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--ranks", type=int, nargs="+", default=[10, 100, 300, 1000, 3000])
    parser.add_argument("--iterations", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>6} {'bits':>7} {'steps':>6} {'decode_ms':>10} {'encode_ms':>10}")
    for n in args.ranks:
        order = group_order("D", n)
        xs = [rng.randrange(order) for _ in range(args.iterations)]
        stats = ConversionStats()
        t = time.perf_counter()
        elements = [decode_d(x, n, stats) for x in xs]
        t_dec = (time.perf_counter() - t) / len(xs)
        t = time.perf_counter()
        assert [encode_d(e) for e in elements] == xs
        t_enc = (time.perf_counter() - t) / len(xs)
        steps = stats.division_steps // len(xs)
        print(f"{n:>6} {order.bit_length():>7} {steps:>6} {t_dec * 1e3:>10.3f} {t_enc * 1e3:>10.3f}")


if __name__ == "__main__":
    main()
