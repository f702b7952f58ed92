#!/usr/bin/env python3
"""Run the acceptance grid and write a JSON report next to a text summary.

    python scripts/run_suite.py --max-n 3 --out results/suite.json
"""

import argparse
import json
import sys
from pathlib import Path

from aqrook.cli import resolve_workers
from aqrook.suite import SuiteBounds, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", type=Path, default=None, help="write the report array here")
    args = parser.parse_args()

    bounds = SuiteBounds() if args.max_n is None else SuiteBounds().capped(args.max_n)
    results = run_suite(bounds, resolve_workers(args.workers))
    for res in results:
        print(res.summary_line())
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "bounds": {k: list(v) if isinstance(v, tuple) else v for k, v in vars(bounds).items()},
            "criteria": [
                {
                    "number": res.number,
                    "title": res.title,
                    "passed": res.passed,
                    "elapsed_s": round(res.elapsed, 4),
                    "reports": [rep.to_json() for rep in res.reports],
                }
                for res in results
            ],
        }
        args.out.write_text(json.dumps(payload, indent=2))
        print(f"wrote {args.out}")
    return 0 if all(res.passed for res in results) else 1


if __name__ == "__main__":
    sys.exit(main())
