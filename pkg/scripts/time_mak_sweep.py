#!/usr/bin/env python3
"""Time the whole-range mak sweep and cross-check its histograms.

For each n in the requested range the sweep runs single-threaded and,
when --threads exceeds one, again in parallel; the two results must be
identical, the histogram totals must sum to the Bell number, and every
per-k histogram must equal the q-Stirling coefficient vector.
"""

import argparse
import json
import sys
import time

from setpart import verify
from setpart.qseries import QPolynomial, q_stirling


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-min", type=int, default=8)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument(
        "--threads", type=int, default=4, help="parallel rerun width (1 skips the rerun)"
    )
    parser.add_argument("--json", action="store_true", dest="as_json")
    args = parser.parse_args()
    if args.n_min < 0 or args.n_max < args.n_min:
        parser.error("need 0 <= --n-min <= --n-max")
    if args.threads < 1:
        parser.error("--threads must be at least 1")

    rows = []
    for n in range(args.n_min, args.n_max + 1):
        start = time.perf_counter()
        hists = verify.mak_histograms(n, threads=1)
        single = time.perf_counter() - start

        parallel = None
        if args.threads > 1:
            start = time.perf_counter()
            rerun = verify.mak_histograms(n, threads=args.threads)
            parallel = time.perf_counter() - start
            assert rerun == hists, f"thread count changed the n={n} histograms"

        total = sum(sum(row) for row in hists.values())
        assert total == verify.bell_number(n)
        for k, row in hists.items():
            assert QPolynomial(row) == q_stirling(n, k), (n, k)

        rows.append(
            {
                "n": n,
                "partitions": total,
                "single_thread_s": round(single, 3),
                "parallel_s": None if parallel is None else round(parallel, 3),
            }
        )

    if args.as_json:
        print(json.dumps({"threads": args.threads, "rows": rows}, indent=2))
    else:
        print(f"{'n':>3} {'partitions':>12} {'1 thread':>10} {f'{args.threads} threads':>11}")
        for row in rows:
            par = "-" if row["parallel_s"] is None else f"{row['parallel_s']:.3f}s"
            print(
                f"{row['n']:>3} {row['partitions']:>12} "
                f"{row['single_thread_s']:>9.3f}s {par:>11}"
            )
        print("all histograms match the q-Stirling coefficient vectors")
    return 0


if __name__ == "__main__":
    sys.exit(main())
