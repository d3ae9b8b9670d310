"""Print nu_lower / nu_upper for m = 1..M and exact or bracketed mu(n) for a few n."""

import argparse

from matchmat.bounds import mu_bounds, nu_lower, nu_upper_exponent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-m", type=int, default=12)
    ap.add_argument("--n", type=int, nargs="*", default=[4, 5, 12, 13, 15, 16, 84, 85, 1000])
    args = ap.parse_args()

    print(f"{'m':>3}  {'nu_lower':>14}  nu_upper")
    for m in range(1, args.max_m + 1):
        print(f"{m:>3}  {nu_lower(m):>14}  2^{nu_upper_exponent(m)}-1")
    print()
    for n in args.n:
        lo, hi = mu_bounds(n)
        print(f"n = {n}: mu = {lo}" if lo == hi else f"n = {n}: {lo} <= mu <= {hi}")


if __name__ == "__main__":
    main()
