#!/usr/bin/env python3
"""Replay every desk-scale width theorem and print a pass/fail table.

Equivalent to ``hcwr verify`` but with a per-case timing column, handy
while iterating on the homology kernels.

Usage: python3 scripts/verify_theorems.py [--budget SECONDS] [--case NAME]
"""
import argparse
import json
import sys

from hcwr.verify import run_cases


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=float, default=120.0,
                    help="per-case time budget in seconds")
    ap.add_argument("--case", help="run a single named case")
    ap.add_argument("--json", action="store_true",
                    help="dump the raw summary instead of a table")
    args = ap.parse_args()

    summary = run_cases(case_filter=args.case, budget=args.budget)
    if args.json:
        print(json.dumps(summary, indent=2))
        return 1 if summary["failures"] else 0

    width = max(len(c["name"]) for c in summary["cases"])
    for c in summary["cases"]:
        print(f"{c['name']:<{width}}  {c['status']:<15}  {c['seconds']:>7.2f}s")
        if c["status"] == "fail":
            print(f"{'':<{width}}  expected {c['expected']}")
            print(f"{'':<{width}}  actual   {c['actual']}")
    print(f"\n{len(summary['cases'])} cases, {summary['failures']} failures")
    return 1 if summary["failures"] else 0


if __name__ == "__main__":
    sys.exit(main())
