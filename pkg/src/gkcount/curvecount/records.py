"""Value types shared by the census engines."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..symcore import LPoly, Partition, format_partition

KINDS = ("M", "H", "Q", "Mbar")


@dataclass(frozen=True, order=True)
class SpaceId:
    kind: str
    g: int
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown space kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 0 or self.g < 0:
            raise ValueError("g and n must be nonnegative")
        if self.kind == "Q" and self.g != 3:
            raise ValueError("Q_n only exists in genus 3")
        if self.kind == "H" and self.g not in (2, 3):
            raise ValueError("hyperelliptic spaces are supported for g in {2, 3}")
        if self.kind in ("M", "Mbar") and not in_window(self.g, self.n):
            raise ValueError(f"(g, n) = ({self.g}, {self.n}) lies outside D_(4,0)")

    @property
    def dimension(self) -> int:
        if self.kind == "H":
            return 2 * self.g - 1 + self.n
        return 3 * self.g - 3 + self.n

    def label(self) -> str:
        return f"{self.kind} {self.g} {self.n}"


def in_window(g: int, n: int, G: int = 4, N: int = 0) -> bool:
    """Membership in D_(G,N) = {max(0, 3-2g) <= n <= 2(G-g)+N, 0 <= g <= G}."""
    return 0 <= g <= G and max(0, 3 - 2 * g) <= n <= 2 * (G - g) + N


def window(G: int = 4, N: int = 0):
    return [(g, n) for g in range(G + 1) for n in range(max(0, 3 - 2 * g), 2 * (G - g) + N + 1)]


@dataclass(frozen=True)
class CountRecord:
    """Groupoid-weighted fixed-point count |X^(sigma F_q)| for sigma of cycle type lam."""

    space: SpaceId
    q: int
    lam: Partition
    value: Fraction

    def line(self) -> str:
        v = Fraction(self.value)
        return (
            f"{self.space.kind} {self.space.g} {self.space.n} "
            f"{format_partition(self.lam)} {self.q} {v.numerator}/{v.denominator}"
        )


@dataclass(frozen=True)
class TracePolynomial:
    """Per-lam trace polynomial P_lam(q) of a moduli space."""

    space: SpaceId
    lam: Partition
    poly: LPoly
    validated: bool = field(default=False, compare=False)

    def __call__(self, q) -> Fraction:
        return self.poly(Fraction(q))
