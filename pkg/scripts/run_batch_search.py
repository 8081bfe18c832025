"""Corroborate f(3) = 0 and f(4) = 1 on the committed geng corpora.

    python3 scripts/run_batch_search.py --workers 4
"""
import argparse
import sys
import time
from pathlib import Path

from cochromatic.bounds import batch_check

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
RUNS = [("triangle_free_le9.g6", 3, 0), ("k4_free_le8.g6", 4, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--budget-ms", type=float)
    args = ap.parse_args()
    bad = 0
    for name, n, f in RUNS:
        t0 = time.perf_counter()
        report = batch_check((DATA / name).read_bytes().splitlines(), n, f, args.budget_ms, args.workers)
        print(f"== {name} (n={n}, f={f}) {time.perf_counter() - t0:.1f}s")
        print(report.to_text())
        bad += len(report.violations) + len(report.timeouts)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
