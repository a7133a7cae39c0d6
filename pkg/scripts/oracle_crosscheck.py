#!/usr/bin/env python3
"""Cross-check the flow-based lambda' against the brute-force oracle.

Covers every connected graph up to --exhaustive-order and a batch of seeded
G(n, p) graphs up to --random-order vertices.  Any disagreement is printed
with the offending graph6 string.

Usage:
    python scripts/oracle_crosscheck.py [--exhaustive-order 7]
        [--random-count 1000] [--random-order 14] [--seed 0]
"""

import argparse
import sys
import time

from lplab import (
    emit_graph6,
    enumerate_connected_graphs,
    lambda_prime_oracle,
    random_graph,
    restricted_edge_connectivity,
)
from lplab.graph import is_connected


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--exhaustive-order", type=int, default=7)
    ap.add_argument("--random-count", type=int, default=1000)
    ap.add_argument("--random-order", type=int, default=14)
    ap.add_argument("--p", type=float, default=0.3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    mismatches = 0
    t0 = time.time()
    checked = 0
    for k in range(1, args.exhaustive_order + 1):
        for g in enumerate_connected_graphs(k, budget=args.exhaustive_order):
            checked += 1
            flow, oracle = restricted_edge_connectivity(g), lambda_prime_oracle(g)
            if flow != oracle:
                mismatches += 1
                print(f"MISMATCH {emit_graph6(g)}: flow={flow} oracle={oracle}")
    print(
        f"exhaustive: {checked} graphs up to order {args.exhaustive_order} "
        f"in {time.time() - t0:.1f}s",
        file=sys.stderr,
    )

    t0 = time.time()
    kept = 0
    seed = args.seed
    while kept < args.random_count:
        n = 4 + (seed % (args.random_order - 3))
        g = random_graph(n, args.p, seed=seed)
        seed += 1
        if not is_connected(g):
            continue
        kept += 1
        flow, oracle = restricted_edge_connectivity(g), lambda_prime_oracle(g)
        if flow != oracle:
            mismatches += 1
            print(f"MISMATCH {emit_graph6(g)}: flow={flow} oracle={oracle}")
    print(
        f"random: {kept} connected G(n,p) graphs (n <= {args.random_order}) "
        f"in {time.time() - t0:.1f}s",
        file=sys.stderr,
    )
    print("agreement: exact" if not mismatches else f"{mismatches} mismatches",
          file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
