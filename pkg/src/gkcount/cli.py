"""Command-line entry point: ``python -m gkcount {count,verify-tables,pipeline}``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import List, Optional

from .config import DEFAULT_CACHE, CensusConfig, PipelineConfig
from .curvecount.cache import CountCache
from .curvecount.records import CountRecord, SpaceId
from .ffield import UnsupportedOperation, prime_power
from .symcore import Partition, format_partition, parse_partition, partitions

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

SUPPORTED = """supported counts:
  M 0 n   3 <= n <= 8, any prime power q (closed form)
  M 1 n   1 <= n <= 6, any prime power q with q^5 <= 2^20
  H g n   g in {2, 3}, n <= 8 - 2g, odd prime q
  Q 3 n   n <= 2, q in {2, 3}"""


class UsageError(Exception):
    pass


def _census_config(args) -> CensusConfig:
    return CensusConfig(threads=args.threads, cache_dir=args.cache_dir, use_cache=not args.no_cache)


def _cache(args) -> CountCache:
    return _census_config(args).cache()


def _compute(kind: str, g: int, n: int, q: int, lam: Partition, threads: int) -> CountRecord:
    if kind == "M" and g == 0:
        from .curvecount.genus0 import genus0_count_poly

        if not 3 <= n <= 8:
            raise UsageError("M 0 n needs 3 <= n <= 8")
        return CountRecord(SpaceId("M", 0, n), q, lam, genus0_count_poly(lam)(q))
    if kind == "M" and g == 1:
        from .curvecount.genus1 import genus1_count

        if not 1 <= n <= 6:
            raise UsageError("M 1 n needs 1 <= n <= 6")
        if q**5 > 2**20:
            raise UsageError("M 1 n needs q^5 <= 2^20")
        return genus1_count(q, lam)
    if kind == "H":
        from .curvecount.hyperelliptic import hyperelliptic_count

        if g not in (2, 3) or n > 8 - 2 * g:
            raise UsageError("H g n needs g in {2, 3} and n <= 8 - 2g")
        if q % 2 == 0:
            raise UsageError("H needs odd q")
        return hyperelliptic_count(g, q, lam, threads=threads)
    if kind == "Q":
        from .curvecount.quartic import quartic_count

        if g != 3 or n > 2 or q not in (2, 3):
            raise UsageError("Q 3 n needs n <= 2 and q in {2, 3}")
        return quartic_count(q, lam)
    raise UsageError(f"no census for {kind} {g} {n}")


def cmd_count(args) -> int:
    try:
        prime_power(args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.n < 0 or args.g < 0:
        raise UsageError("g and n must be nonnegative")
    if args.lam is not None:
        lam = parse_partition(args.lam)
        if lam.weight != args.n:
            raise UsageError(f"lambda {format_partition(lam)} is not a partition of n={args.n}")
        lams = [lam]
    else:
        lams = list(partitions(args.n))
    cache = _cache(args)
    try:
        space = SpaceId(args.kind, args.g, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    for lam in lams:
        try:
            rec = cache.get_or_compute(space, args.q, lam,
                                       lambda lam=lam: _compute(args.kind, args.g, args.n, args.q, lam, args.threads))
        except UnsupportedOperation as exc:
            raise UsageError(str(exc))
        if args.format == "tsv":
            print(rec.line())
        else:
            print(f"{args.kind} {args.g} {args.n} {format_partition(lam)} q={args.q}: {rec.value}")
    cache.flush()
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    from .gkpipeline import table_checks

    t0 = time.time()
    checks = table_checks(args.which, args.budget, _cache(args), args.threads)
    bad = [c for c in checks if not c.ok]
    for c in checks:
        status = "pass" if c.ok else "FAIL"
        if args.format == "tsv":
            print("\t".join([c.table, str(c.g), str(c.n), format_partition(c.lam), str(c.q), status]))
        else:
            print(f"{status}  {c.table} g={c.g} n={c.n} {format_partition(c.lam):>8} q={c.q}  {c.observed}")
    print(f"{len(checks) - len(bad)}/{len(checks)} entries agree ({time.time() - t0:.1f}s)", file=sys.stderr)
    for c in bad:
        print("mismatch: " + c.describe(), file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_pipeline(args) -> int:
    from .gkpipeline import run_pipeline, target_check

    try:
        config = PipelineConfig(D=args.D, ledger_source=args.ledger_source, census=_census_config(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    report = run_pipeline(config)
    for line in report.lines(args.format):
        print(line)
    status = EXIT_OK
    for f in report.findings:
        print(f"finding: {f}", file=sys.stderr)
        status = EXIT_MISMATCH
    problem = target_check(report)
    if problem:
        print(f"target mismatch: {problem}", file=sys.stderr)
        status = EXIT_MISMATCH
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads for census loops")
    common.add_argument("--cache-dir", type=Path, default=DEFAULT_CACHE)
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the count cache")
    common.add_argument("--format", choices=("tsv", "pretty"), default="pretty")

    parser = argparse.ArgumentParser(
        prog="gkcount",
        description="Exact point counts and Getzler-Kapranov transform for moduli of curves.",
        epilog=SUPPORTED,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="equivariant fixed-point counts",
                       epilog=SUPPORTED, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("kind", choices=("M", "H", "Q"))
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None, help="cycle type, e.g. 2,1 (default: all)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify-tables", parents=[common], help="census against the tabulated counts")
    p.add_argument("--which", choices=("table1", "table2", "all"), default="all")
    p.add_argument("--budget", choices=("fast", "full"), default="fast")
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("pipeline", parents=[common], help="run the transform and print e(Mbar_{g,n})")
    p.add_argument("--D", type=int, default=6)
    p.add_argument("--ledger-source", choices=("fixtures", "census-where-possible"), default="fixtures")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        print(SUPPORTED, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
