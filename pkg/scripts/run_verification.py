#!/usr/bin/env python3
"""Run the exhaustive verification suites and print a compact summary.

Exit status is non-zero when any suite reports a failure, so the script
is suitable for CI.  Wall times go to stderr in text mode; JSON output
carries them in the wall_time_s field instead.
"""

import argparse
import json
import sys

from setpart import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--suite",
        default="all",
        choices=list(verify.SUITE_NAMES) + ["all"],
        help="suite to run (default: all)",
    )
    parser.add_argument(
        "--n-max", type=int, default=None, help="override each suite's default range"
    )
    parser.add_argument("--threads", type=int, default=1, help="worker processes")
    parser.add_argument(
        "--max-witnesses", type=int, default=10, help="cap on reported failures per suite"
    )
    parser.add_argument("--json", action="store_true", dest="as_json")
    args = parser.parse_args()
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    if args.n_max is not None and args.n_max < 0:
        parser.error("--n-max must be non-negative")

    names = list(verify.SUITE_NAMES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        report = verify.run_suite(
            name, n_max=args.n_max, threads=args.threads, max_witnesses=args.max_witnesses
        )
        reports.append(report)
        print(
            f"[{report.suite}] {report.cases} cases in {report.wall_time_s:.3f}s",
            file=sys.stderr,
        )

    if args.as_json:
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    else:
        print("\n\n".join(r.render_text() for r in reports))
        print()
        width = max(len(r.suite) for r in reports)
        for r in reports:
            verdict = "PASS" if r.passed else f"FAIL ({r.failure_count} failures)"
            print(f"{r.suite:<{width}}  n<={r.n_max}  {r.cases:>8} cases  {verdict}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
