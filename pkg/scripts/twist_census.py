"""Census of the sign-twist involution: fixed points and moved pairs.

For each n up to --n-max the script applies the involution to every
p-regular partition of n and reports how many are fixed, together with the
largest value of the longest-row statistic seen.

Usage: python3 scripts/twist_census.py --p 3 --n-max 16
"""

import argparse

from repgrowth.partitions import m_p, mullineux, p_regular_partitions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n-max", dest="n_max", type=int, default=16)
    args = ap.parse_args()

    print(f"p = {args.p}")
    print(f"{'n':>4} {'regular':>8} {'fixed':>6} {'pairs':>6} {'max m_p':>8}")
    for n in range(1, args.n_max + 1):
        fixed = 0
        moved = 0
        biggest = 0
        for lam in p_regular_partitions(n, args.p):
            image = mullineux(lam, args.p)
            assert mullineux(image, args.p) == lam
            if image == lam:
                fixed += 1
            else:
                moved += 1
            biggest = max(biggest, m_p(lam, args.p))
        assert moved % 2 == 0
        print(f"{n:>4} {fixed + moved:>8} {fixed:>6} {moved // 2:>6} "
              f"{biggest:>8}")


if __name__ == "__main__":
    main()
