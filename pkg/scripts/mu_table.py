"""Compute mu(K_n) exactly for small n with the exact search."""

import argparse
import time

from matchmat import SearchConfig, complete, compute_mu


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    cfg = SearchConfig(workers=args.threads)
    for n in range(1, args.max_n + 1):
        t0 = time.monotonic()
        mu, _ = compute_mu(complete(n), cfg)
        print(f"K_{n}: mu = {mu}  ({time.monotonic() - t0:.2f}s)")


if __name__ == "__main__":
    main()
