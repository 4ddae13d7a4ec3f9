#!/usr/bin/env python3
"""Run every theorem oracle and print a one-line verdict per check.

Exhaustive by default (operators/partitions at n = 3, families at n = 4);
pass --samples to switch every suite that supports it to seeded sampling.
"""
import argparse
import sys
import time

from cospan.verify import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all", choices=sorted(SUITES))
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    start = time.perf_counter()
    results = run_suite(args.suite, args.n, args.samples, args.seed)
    elapsed = time.perf_counter() - start

    width = max(len(r.report.property) for r in results)
    failures = 0
    for r in results:
        verdict = "ok" if r.report.holds else "FAIL"
        counts = ", ".join(f"{k}={v}" for k, v in r.counts.items())
        print(f"{r.report.property:<{width}}  {verdict:<4}  {counts}")
        if not r.report.holds:
            failures += 1
            print(f"  witness: {r.report.witness!r}")
    print(f"{len(results)} checks, {failures} failures, {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
