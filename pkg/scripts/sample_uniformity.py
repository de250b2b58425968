"""Chi-square check that rank sampling is uniform over a small group.

Draws uniform ranks, decodes them, and tallies group elements.  Since decode
is a bijection the counts should look uniform.

    python scripts/sample_uniformity.py [--family D] [--rank 4] [--draws 200000]
"""

import argparse
import random
from collections import Counter

from scipy.stats import chisquare

from weylrank.codec import decode
from weylrank.oracle import enumerate_group


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--family", default="D")
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--draws", type=int, default=200_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    group = enumerate_group(args.family, args.rank)
    rng = random.Random(args.seed)
    counts = Counter(
        decode(args.family, rng.randrange(len(group)), args.rank).window for _ in range(args.draws)
    )
    observed = [counts[g.window] for g in group]
    stat, p = chisquare(observed)
    print(f"group={args.family}{args.rank} elements={len(group)} draws={args.draws}")
    print(f"hit every element: {all(observed)}")
    print(f"chi2={stat:.1f} dof={len(group) - 1} p={p:.3f}")


if __name__ == "__main__":
    main()
