#!/usr/bin/env python3
"""Run the whole claim-verification battery on the standard corpora.

Equality and implication claims sweep every connected graph up to --max-order
(default 5) at the smallest admissible n values; the cut lemmas and super
corollaries run on their default n ranges.  Exit status 1 if any
counterexample turns up.

Usage:
    python scripts/verify_claims.py [--max-order 5] [--budget 30] [--json]
"""

import argparse
import sys
import time

from lplab.harness import DEFAULT_N, FAMILY_CLAIMS, GRAPH_CLAIMS, CorpusSpec, sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=5,
                    help="largest factor order for the exhaustive corpus")
    ap.add_argument("--budget", type=int, default=30,
                    help="oracle budget (max product order for exhaustive sweeps)")
    ap.add_argument("--time-cap", type=int, default=120)
    ap.add_argument("--json", action="store_true", help="emit JSON lines")
    args = ap.parse_args()

    corpus = CorpusSpec(kind="order", order=args.max_order, cumulative=True)
    bad = 0
    for claim in FAMILY_CLAIMS + GRAPH_CLAIMS:
        t0 = time.time()
        res = sweep(
            corpus if claim in GRAPH_CLAIMS else None,
            [claim],
            n_values=list(DEFAULT_N[claim]),
            oracle_budget=args.budget,
            time_cap=args.time_cap,
        )
        dt = time.time() - t0
        if args.json:
            print(res.to_json_lines())
        counts = " ".join(f"{k}={v}" for k, v in sorted(res.summary.items()) if v)
        print(f"[{claim:<8}] {counts}  ({dt:.1f}s)", file=sys.stderr)
        bad += len(res.counterexamples)
        for r in res.counterexamples:
            print(f"  COUNTEREXAMPLE {r.to_json()}", file=sys.stderr)
    print(
        "no counterexamples" if not bad else f"{bad} counterexamples",
        file=sys.stderr,
    )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
