#!/usr/bin/env python3
"""Differential sweep across automaton sizes.

For each size, generates seeded random trim automata and replays the
whole oracle battery (fast vs naive check, witness replay, order-type
invariants, rank spot checks), printing one summary row per size.
Exits nonzero if any size produced a failure.

    python3 scripts/fuzz_sweep.py --seeds 2000 --max-states 8
"""

import argparse
import sys
import time

from ordfa.oracle import fuzz


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=1000, help="automata per size")
    ap.add_argument("--max-states", type=int, default=8)
    ap.add_argument("--verify-depth", type=int, default=32)
    ap.add_argument(
        "--rank-len",
        type=int,
        default=3,
        help="max word length for rank spot checks (0 disables)",
    )
    args = ap.parse_args()

    print("states\ttotal\twell_ordered\tfailures\tseconds")
    bad = 0
    for states in range(2, args.max_states + 1):
        t0 = time.perf_counter()
        report = fuzz(
            args.seeds,
            states,
            verify_depth=args.verify_depth,
            rank_len=args.rank_len,
        )
        elapsed = time.perf_counter() - t0
        bad += report.failures
        print(
            f"{states}\t{report.total}\t{report.well_ordered}\t"
            f"{report.failures}\t{elapsed:.2f}"
        )
        if report.failures:
            print(f"  first failing seed: {report.first_failure_key}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
