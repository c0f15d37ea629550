"""Argument helpers shared by the experiment scripts."""

import argparse
from pathlib import Path

from gkcount.config import DEFAULT_CACHE, CensusConfig


def add_census_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir", type=Path, default=DEFAULT_CACHE)
    p.add_argument("--no-cache", action="store_true")


def census_config(args) -> CensusConfig:
    return CensusConfig(threads=args.threads, cache_dir=args.cache_dir, use_cache=not args.no_cache)
