"""Recount the hyperelliptic and quartic tables at small fields and compare with the fixtures.

    python3 scripts/verify_tables.py --which table1 --budget full
"""

import argparse
import sys
import time

from _common import add_census_args, census_config
from gkcount.config import VerifyConfig
from gkcount.gkpipeline import table_checks
from gkcount.symcore import format_partition


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--which", default="all", choices=["table1", "table2", "all"])
    p.add_argument("--budget", default="fast", choices=["fast", "full"])
    add_census_args(p)
    args = p.parse_args()
    cfg = VerifyConfig(which=args.which, budget=args.budget, census=census_config(args))
    t0 = time.perf_counter()
    checks = table_checks(cfg.which, cfg.budget, cfg.census.cache(), cfg.census.threads)
    for c in checks:
        print(f"{'pass' if c.ok else 'FAIL'}\t{c.table}\tg={c.g}\tn={c.n}\t{format_partition(c.lam)}\tq={c.q}\t{c.observed}")
    bad = [c for c in checks if not c.ok]
    for c in bad:
        print("mismatch: " + c.describe(), file=sys.stderr)
    print(f"# {len(checks) - len(bad)}/{len(checks)} agree, {time.perf_counter() - t0:.0f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
