"""Where complete graphs start to k-cancel.

Usage:
    python3 demos/complete_graph_thresholds.py [--kmax KMAX]

For each k the scan tries the cyclic signing first and falls back to
the full signing sweep, so a negative row is an exhaustive result.
The known general bounds only kick in from k = 5, where scans are out
of reach; small k is settled exactly by the scan itself.
"""

import argparse

from signedwiener.search import n2k_bounds, threshold_scan


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=3)
    args = ap.parse_args()

    for k in range(1, args.kmax + 1):
        print(f"k = {k}:")
        print("   n   k-canceling   signings examined")
        threshold = None
        for row in threshold_scan(2, k, range(max(2, k + 1), k + 5)):
            print(f"  {row.n:2d}   {str(row.holds):<13s} {row.examined}")
            if row.holds and threshold is None:
                threshold = row.n
        print(f"  first success at n = {threshold}")
        print()

    print("asymptotic bounds for larger k (k + log_4 k <= n_2,k <= 2k+4):")
    for k in (5, 8, 16, 64):
        b = n2k_bounds(k)
        print(f"  k = {k:2d}: {b.lower} <= n_2,{k} <= {b.upper}")


if __name__ == "__main__":
    main()
