#!/usr/bin/env python3
"""Random survey of twist thresholds: closed form against a brute-force scan.

Draws random monomial maps between random pairs, computes the least
admissible twist two ways, and prints a histogram of the thresholds plus
how often no twist works at all.
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from modpairs import Chart, Divisor, MonomialMap, Pair, PairMap, is_admissible, minimal_twist, twist


def random_map(rng, max_dim, max_expo, max_mult):
    ds, dt = rng.randint(1, max_dim), rng.randint(1, max_dim)
    src = Chart(tuple(f"x{i}" for i in range(ds)))
    dst = Chart(tuple(f"y{j}" for j in range(dt)))
    expo = tuple(tuple(rng.randint(0, max_expo) for _ in range(ds)) for _ in range(dt))
    return PairMap(
        MonomialMap(src, dst, expo),
        Pair(src, Divisor(tuple(rng.randint(0, max_mult) for _ in range(ds)))),
        Pair(dst, Divisor(tuple(rng.randint(0, max_mult) for _ in range(dt)))),
    )


def brute(f, limit):
    for n in range(1, limit + 1):
        if is_admissible(PairMap(f.map, twist(f.src, n), f.dst)):
            return n
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--limit", type=int, default=512)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    histogram = Counter()
    disagreements = 0
    for _ in range(args.samples):
        f = random_map(rng, max_dim=4, max_expo=5, max_mult=10)
        closed = minimal_twist(f)
        scanned = brute(f, args.limit)
        if closed != scanned and not (closed is not None and closed > args.limit):
            disagreements += 1
        histogram["infeasible" if closed is None else closed] += 1

    print(f"samples: {args.samples}, disagreements with brute force: {disagreements}")
    for key in sorted(histogram, key=lambda k: (isinstance(k, str), k)):
        print(f"  twist {key}: {histogram[key]}")


if __name__ == "__main__":
    main()
