"""Scan the rank-vs-log ratio at n = (r+1)! and watch it settle under 1.8.

Usage: python3 scripts/ratio_scan.py [--r-min 5] [--r-max 69] [--bits 64]
"""

import argparse
from math import factorial

from repgrowth.bounds import ratio_holds, ratio_iv
from repgrowth.intervals import enclosure


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-min", type=int, default=5)
    ap.add_argument("--r-max", type=int, default=69)
    ap.add_argument("--bits", type=int, default=64)
    args = ap.parse_args()

    print(f"{'r':>4} {'n = (r+1)!':>16} {'ratio enclosure':>44} verdict")
    for r in range(args.r_min, args.r_max + 1):
        n = factorial(r + 1)
        lo, hi = enclosure(lambda: ratio_iv(r, n), args.bits)
        cert = ratio_holds(r, n)
        print(f"{r:>4} {n:>16} [{lo:>20.20s}, {hi:>20.20s}] {cert.verdict}")


if __name__ == "__main__":
    main()
