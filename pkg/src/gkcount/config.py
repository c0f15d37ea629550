"""Run configurations shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Tuple

from .curvecount.cache import CountCache

DEFAULT_CACHE = Path.home() / ".cache" / "gkcount"


@dataclass(frozen=True)
class CensusConfig:
    threads: int = 1
    cache_dir: Optional[Path] = DEFAULT_CACHE
    use_cache: bool = True

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")

    def cache(self) -> CountCache:
        if not self.use_cache or self.cache_dir is None:
            return CountCache(None, enabled=False)
        return CountCache(self.cache_dir)


@dataclass(frozen=True)
class PipelineConfig:
    D: int = 6
    ledger_source: str = "fixtures"
    genus1_samples: Tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)
    genus1_holdout: int = 11
    census: CensusConfig = field(default_factory=CensusConfig)

    def __post_init__(self):
        if not 1 <= self.D <= 6:
            raise ValueError("D must be between 1 and 6 (inputs cover D_(4,0))")
        if self.ledger_source not in ("fixtures", "census-where-possible"):
            raise ValueError(f"unknown ledger source {self.ledger_source!r}")
        if self.genus1_holdout in self.genus1_samples:
            raise ValueError("holdout field must not be among the samples")


@dataclass(frozen=True)
class VerifyConfig:
    which: str = "all"
    budget: str = "fast"
    census: CensusConfig = field(default_factory=CensusConfig)

    def __post_init__(self):
        if self.which not in ("table1", "table2", "all"):
            raise ValueError("which must be table1, table2 or all")
        if self.budget not in ("fast", "full"):
            raise ValueError("budget must be fast or full")
