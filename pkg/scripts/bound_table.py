"""Tabulate exact lower-bound counts against the certified upper bound.

For every restricted dominant weight of the chosen datum the script computes
a dimension lower bound, then for each n up to --n-max compares the number
of weights whose bound is at most n with the certified count upper bound.

Usage: python3 scripts/bound_table.py --family A --rank 2 --p 5 --n-max 30
"""

import argparse
import itertools
from bisect import bisect_right

from repgrowth.bounds import n_lambda, premet_lower, rn_upper
from repgrowth.rootdata import root_datum


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="A",
                    choices=("A", "B", "C", "D", "E", "F", "G"))
    ap.add_argument("--rank", type=int, default=2)
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n-max", dest="n_max", type=int, default=30)
    ap.add_argument("--bound", default="nlambda",
                    choices=("nlambda", "premet"))
    args = ap.parse_args()

    datum = root_datum(args.family, args.rank)
    values = []
    for w in itertools.product(range(args.p), repeat=args.rank):
        if args.bound == "premet":
            values.append(premet_lower(datum, w, args.p))
        else:
            values.append(n_lambda(datum, w))
    values.sort()

    print(f"{args.family}{args.rank}, p = {args.p}, "
          f"{len(values)} restricted weights, bound = {args.bound}")
    print(f"{'n':>6} {'count <= n':>10}  certified upper bound")
    for n in range(1, args.n_max + 1):
        count = bisect_right(values, n)
        rep = rn_upper(args.family, args.rank, n, args.p)
        print(f"{n:>6} {count:>10}  {rep.name}: {rep.value}")


if __name__ == "__main__":
    main()
