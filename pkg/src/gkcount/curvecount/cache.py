"""On-disk cache of CountRecords.

One record per line, ``kind g n lambda q num/den``, lines sorted, so the
file is bit-for-bit reproducible.  Writes go to a temporary file that is
renamed over the target.
"""

from __future__ import annotations

import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, Iterable, Optional, Tuple

from ..symcore import Partition, format_partition, parse_partition
from .records import CountRecord, SpaceId

CODE_VERSION = 1

Key = Tuple[str, int, int, str, int]


def parse_line(line: str) -> CountRecord:
    parts = line.split()
    if len(parts) != 6:
        raise ValueError(f"malformed cache line: {line!r}")
    kind, g, n, lam, q, frac = parts
    num, den = frac.split("/")
    space = SpaceId(kind, int(g), int(n))
    return CountRecord(space, int(q), parse_partition(lam), Fraction(int(num), int(den)))


def _key(space: SpaceId, q: int, lam) -> Key:
    return (space.kind, space.g, space.n, format_partition(lam), q)


class CountCache:
    def __init__(self, directory: Optional[os.PathLike] = None, enabled: bool = True):
        self.enabled = enabled and directory is not None
        self.path = Path(directory) / f"counts-v{CODE_VERSION}.txt" if directory is not None else None
        self._records: Dict[Key, CountRecord] = {}
        if self.enabled and self.path.exists():
            for line in self.path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    rec = parse_line(line)
                    self._records[_key(rec.space, rec.q, rec.lam)] = rec

    def __len__(self) -> int:
        return len(self._records)

    def get(self, space: SpaceId, q: int, lam) -> Optional[CountRecord]:
        return self._records.get(_key(space, q, Partition.from_parts(lam)))

    def put(self, record: CountRecord) -> None:
        self._records[_key(record.space, record.q, record.lam)] = record

    def get_or_compute(self, space: SpaceId, q: int, lam, compute: Callable[[], CountRecord]) -> CountRecord:
        rec = self.get(space, q, lam)
        if rec is None:
            rec = compute()
            self.put(rec)
        return rec

    def lines(self) -> Iterable[str]:
        return sorted(rec.line() for rec in self._records.values())

    def flush(self) -> None:
        if not self.enabled:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        text = "".join(line + "\n" for line in self.lines())
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".counts-", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
