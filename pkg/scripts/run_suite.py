"""Run the full certification battery and write the JSON report.

    python3 scripts/run_suite.py --out suite.json --workers 4
"""

import argparse
import sys
import time

from nilcone.report import dumps
from nilcone.sweeps import run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--out", default="suite.json")
    args = ap.parse_args()

    start = time.perf_counter()
    result = run_suite(
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
        progress=lambda line: print(line, file=sys.stderr),
    )
    with open(args.out, "w") as fh:
        fh.write(dumps(result))
    print(f"{'PASS' if result.passed else 'FAIL'} in {time.perf_counter() - start:.1f}s -> {args.out}")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
