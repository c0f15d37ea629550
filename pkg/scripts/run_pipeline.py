"""Run the transform over the truncation window and print the compactified rows.

    python3 scripts/run_pipeline.py --D 6
"""

import argparse
import sys
import time

from _common import add_census_args, census_config
from gkcount.config import PipelineConfig
from gkcount.gkpipeline import run_pipeline, target_check


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--D", type=int, default=6)
    p.add_argument("--ledger-source", default="fixtures", choices=["fixtures", "census-where-possible"])
    p.add_argument("--format", default="pretty", choices=["pretty", "tsv"])
    add_census_args(p)
    args = p.parse_args()
    cfg = PipelineConfig(D=args.D, ledger_source=args.ledger_source, census=census_config(args))
    t0 = time.perf_counter()
    report = run_pipeline(cfg)
    for line in report.lines(args.format):
        print(line)
    print(f"# {len(report.rows)} rows in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    for f in report.findings:
        print(f"# finding: {f}", file=sys.stderr)
    problem = target_check(report) if args.D == 6 else None
    if problem:
        print(f"# {problem}", file=sys.stderr)
    return 1 if report.findings or problem else 0


if __name__ == "__main__":
    sys.exit(main())
