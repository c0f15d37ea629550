"""Published point counts and Hodge-Euler characteristics used as inputs and targets.

Polynomials are stored as ascending coefficient tuples (constant term first).
Keys of each table are Schur labels as partitions; () is s_0.
"""

from __future__ import annotations

import hashlib
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .symcore import LPoly, Partition

Coeffs = Tuple[int, ...]
SchurTable = Mapping[Tuple[int, ...], Coeffs]


def _freeze(d):
    return MappingProxyType({k: MappingProxyType(dict(v)) for k, v in d.items()})


# Equivariant counts of H_{g,n}, as polynomials in q.
TABLE1 = _freeze({
    (2, 0): {(): (0, 0, 0, 1)},
    (2, 1): {(1,): (0, 0, 0, 1, 1)},
    (2, 2): {(2,): (-1, 0, 0, 0, 1, 1), (1, 1): (0, 0, 0, 0, 1)},
    (2, 3): {(3,): (0, -1, 0, 0, -1, 1, 1), (2, 1): (0, -1, 0, 0, 0, 1)},
    (2, 4): {
        (4,): (1, 1, -1, 0, -1, -1, 1, 1),
        (3, 1): (0, 0, -1, 0, 0, -1, 1),
        (2, 2): (0, 0, -1),
        (2, 1, 1): (-1, 0, 1),
    },
    (3, 0): {(): (0, 0, 0, 0, 0, 1)},
    (3, 1): {(1,): (0, 0, 0, 0, 0, 1, 1)},
    (3, 2): {(2,): (0, 0, 0, 0, 0, 0, 1, 1), (1, 1): (-1, 0, 0, 0, 0, 0, 1)},
})

# Equivariant counts of Q_n (non-hyperelliptic genus 3, i.e. plane quartics).
TABLE2 = _freeze({
    0: {(): (1, 0, 0, 0, 0, 0, 1)},
    1: {(1,): (1, 1, 0, 0, 0, 0, 1, 1)},
    2: {(2,): (0, 1, 1, 0, 0, -1, 0, 1, 1), (1, 1): (1, 1, 0, 0, 0, 0, 0, 1)},
})

# e(M_4) in L.
E_M4: Coeffs = (0, 0, 0, 0, 0, 0, -1, 1, 1, 1)

# e(Mbar_4) in L.
THEOREM_TARGET: Coeffs = (1, 4, 13, 32, 50, 50, 32, 13, 4, 1)

# e_{S_4}(M_{2,4}) in L.
CHAR24 = MappingProxyType({
    (4,): (1, 1, -1, 0, -1, -1, 1, 1),
    (3, 1): (0, 0, -1, 0, 0, -1, 1),
    (2, 2): (0, 0, -1),
    (2, 1, 1): (-1, 0, 1),
})

# e_{S_2}(M_{3,2}) in L.
CHAR32 = MappingProxyType({
    (2,): (0, 1, 1, 0, 0, -1, 1, 2, 1),
    (1, 1): (0, 1, 0, 0, 0, 0, 1, 1),
})


def canonical_text() -> str:
    """Deterministic serialisation of every fixture, one entry per line."""
    lines = []
    for (g, n), row in sorted(TABLE1.items()):
        for lam, c in sorted(row.items()):
            lines.append(f"T1 {g} {n} {lam} {c}")
    for n, row in sorted(TABLE2.items()):
        for lam, c in sorted(row.items()):
            lines.append(f"T2 {n} {lam} {c}")
    lines.append(f"M4 {E_M4}")
    lines.append(f"TARGET {THEOREM_TARGET}")
    for name, table in (("C24", CHAR24), ("C32", CHAR32)):
        for lam, c in sorted(table.items()):
            lines.append(f"{name} {lam} {c}")
    return "\n".join(lines) + "\n"


def checksum() -> str:
    return hashlib.sha256(canonical_text().encode("utf-8")).hexdigest()


FIXTURE_SHA256 = "c6ce80be97a764f4163da7fdf4ebd7a4868ad31b08d47fe314b7bf46768b79d6"


def verify_checksum() -> None:
    if checksum() != FIXTURE_SHA256:
        raise RuntimeError("fixture data has been modified (checksum mismatch)")


def as_lpolys(table: SchurTable) -> Dict[Partition, LPoly]:
    return {Partition.from_parts(lam): LPoly(c) for lam, c in table.items()}


def table1(g: int, n: int) -> Dict[Partition, LPoly]:
    return as_lpolys(TABLE1[(g, n)])


def table2(n: int) -> Dict[Partition, LPoly]:
    return as_lpolys(TABLE2[n])


def e_m4() -> LPoly:
    return LPoly(E_M4)


def theorem_target() -> LPoly:
    return LPoly(THEOREM_TARGET)


def char24() -> Dict[Partition, LPoly]:
    return as_lpolys(CHAR24)


def char32() -> Dict[Partition, LPoly]:
    return as_lpolys(CHAR32)


def m3n(n: int) -> Dict[Partition, LPoly]:
    """e_{S_n}(M_{3,n}) as the sum of the hyperelliptic and quartic parts."""
    out = table1(3, n)
    for lam, c in table2(n).items():
        out[lam] = out.get(lam, LPoly()) + c
    return out
