#!/usr/bin/env python3
"""Tabulate the three membership tests over the monomial family t -> (t^a, t^b).

With unit multiplicities on both sides, every coprime pair with a > 1 lands
in the twisted-admissible class while failing the log-divisibility test;
this script prints the whole table so the boundary is visible.
"""

import argparse
import sys
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from modpairs import corr_minimal_twist, from_monomial_param, in_colim_mcor, in_lcor, in_mcor


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=12, help="largest exponent to scan")
    parser.add_argument("--coprime-only", action="store_true")
    args = parser.parse_args()

    print(f"{'a':>3} {'b':>3} {'gcd':>3} {'mcor':>5} {'colim':>5} {'lcor':>5} {'twist':>6}")
    for a in range(1, args.max + 1):
        for b in range(1, args.max + 1):
            if args.coprime_only and gcd(a, b) != 1:
                continue
            corr = from_monomial_param(a, b, 1, 1)
            twist = corr_minimal_twist(corr)
            print(
                f"{a:>3} {b:>3} {gcd(a, b):>3}"
                f" {str(in_mcor(corr)).lower():>5}"
                f" {str(in_colim_mcor(corr)).lower():>5}"
                f" {str(in_lcor(corr)).lower():>5}"
                f" {'inf' if twist is None else twist:>6}"
            )


if __name__ == "__main__":
    main()
