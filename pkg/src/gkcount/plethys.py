"""Truncated K_0 (x) Lambda((hbar)) with plethysm, Exp/Log and the Laplacian.

A term hbar^a L^b p_mu has total degree 2a + |mu| (L has degree 0).  A
``GradedSeries`` keeps only the terms of total degree in [0, D]; every
operation below discards anything that overflows the window.  With this
grading the plethystic operations are filtered: p_k multiplies degrees by k
and the Laplacian preserves them.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Mapping, Optional, Tuple

from .symcore import (
    ONE,
    ZERO,
    LPoly,
    Partition,
    SymPolynomial,
    as_lpoly,
    h_in_p,
    mobius,
)

Key = Tuple[int, Tuple[int, ...]]


def term_degree(a: int, mu: Tuple[int, ...]) -> int:
    return 2 * a + sum(mu)


def _merge(m1: Tuple[int, ...], m2: Tuple[int, ...]) -> Tuple[int, ...]:
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2, reverse=True))


class GradedSeries:
    """Truncated series sum c_{a,mu}(L) hbar^a p_mu, total degree <= D."""

    __slots__ = ("D", "terms")

    def __init__(self, terms: Mapping[Key, object] = (), D: int = 6):
        self.D = D
        clean: Dict[Key, LPoly] = {}
        for (a, mu), c in dict(terms).items():
            c = as_lpoly(c)
            mu = Partition.from_parts(mu)
            deg = term_degree(a, mu)
            if deg < 0:
                raise ValueError(f"term hbar^{a} p{tuple(mu)} has negative degree")
            if deg > D or not c:
                continue
            key = (a, tuple(mu))
            clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: Dict[Key, LPoly], D: int) -> "GradedSeries":
        obj = object.__new__(cls)
        obj.D = D
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, D: int = 6) -> "GradedSeries":
        return cls._raw({(0, ()): ONE}, D)

    @classmethod
    def from_sym(cls, f: SymPolynomial, hbar_exp: int = 0, D: int = 6) -> "GradedSeries":
        return cls({(hbar_exp, mu): c for mu, c in f.terms.items()}, D)

    # -- inspection -------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSeries) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (term_degree(*kv[0]), kv[0]))
        body = " + ".join(f"({c.format()})*h^{a}*p{mu}" for (a, mu), c in items[:12])
        more = "" if len(items) <= 12 else f" + ... ({len(items)} terms)"
        return f"GradedSeries(D={self.D}: {body or '0'}{more})"

    def min_degree(self) -> Optional[int]:
        return min((term_degree(a, mu) for a, mu in self.terms), default=None)

    def degree_part(self, deg: int) -> "GradedSeries":
        return GradedSeries._raw(
            {k: v for k, v in self.terms.items() if term_degree(*k) == deg}, self.D
        )

    def constant_term(self) -> LPoly:
        return self.terms.get((0, ()), ZERO)

    def coefficient(self, hbar_exp: int, n: int) -> SymPolynomial:
        """The degree-n symmetric function multiplying hbar^hbar_exp."""
        return SymPolynomial(
            {mu: c for (a, mu), c in self.terms.items() if a == hbar_exp and sum(mu) == n}
        )

    def truncate(self, D: int) -> "GradedSeries":
        return GradedSeries._raw(
            {k: v for k, v in self.terms.items() if term_degree(*k) <= D}, min(D, self.D)
        )

    # -- ring structure ---------------------------------------------------

    def _window(self, other: "GradedSeries") -> int:
        return min(self.D, other.D)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        D = self._window(other)
        out = {k: v for k, v in self.terms.items() if term_degree(*k) <= D}
        for k, v in other.terms.items():
            if term_degree(*k) > D:
                continue
            if k in out:
                s = out[k] + v
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = v
        return GradedSeries._raw(out, D)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries._raw({k: -v for k, v in self.terms.items()}, self.D)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def scale(self, c) -> "GradedSeries":
        c = as_lpoly(c)
        if not c:
            return GradedSeries._raw({}, self.D)
        return GradedSeries._raw({k: v * c for k, v in self.terms.items()}, self.D)

    def __mul__(self, other) -> "GradedSeries":
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        D = self._window(other)
        by_deg: Dict[int, list] = {}
        for k, v in other.terms.items():
            by_deg.setdefault(term_degree(*k), []).append((k, v))
        out: Dict[Key, LPoly] = {}
        for (a1, m1), c1 in self.terms.items():
            d1 = term_degree(a1, m1)
            for d2, items in by_deg.items():
                if d1 + d2 > D:
                    continue
                for (a2, m2), c2 in items:
                    key = (a1 + a2, _merge(m1, m2))
                    v = c1 * c2
                    if key in out:
                        out[key] = out[key] + v
                    else:
                        out[key] = v
        return GradedSeries._raw({k: v for k, v in out.items() if v}, D)

    __rmul__ = scale

    def pow(self, k: int) -> "GradedSeries":
        out = GradedSeries.one(self.D)
        for _ in range(k):
            out = out * self
        return out

    # -- plethysm -----------------------------------------------------------

    def adams(self, k: int) -> "GradedSeries":
        """p_k o self: hbar^a L^b p_mu -> hbar^{ka} L^{kb} p_{k mu}."""
        if k < 1:
            raise ValueError("p_k requires k >= 1")
        out: Dict[Key, LPoly] = {}
        for (a, mu), c in self.terms.items():
            if k * term_degree(a, mu) > self.D:
                continue
            key = (k * a, tuple(k * x for x in mu))
            out[key] = c.substitute_power(k)
        return GradedSeries._raw(out, self.D)


def _require_positive(f: GradedSeries, what: str) -> None:
    m = f.min_degree()
    if m is not None and m < 1:
        raise ValueError(f"{what} requires every term to have total degree >= 1")


def plethysm_outer(f: SymPolynomial, g: GradedSeries) -> GradedSeries:
    """f o g for an L-free symmetric function f."""
    if f.has_L():
        raise ValueError("outer plethysm operand must not involve L")
    _require_positive(g, "plethysm")
    cache: Dict[int, GradedSeries] = {}
    out = GradedSeries._raw({}, g.D)
    for nu, c in f.terms.items():
        term = GradedSeries.one(g.D)
        for part in nu:
            if part not in cache:
                cache[part] = g.adams(part)
            term = term * cache[part]
            if not term:
                break
        out = out + term.scale(c)
    return out


def series_exp(x: GradedSeries) -> GradedSeries:
    """Ordinary exp of a series with no degree-0 terms (finite under truncation)."""
    _require_positive(x, "exp")
    out = GradedSeries.one(x.D)
    power = GradedSeries.one(x.D)
    for j in range(1, x.D + 1):
        power = power * x
        if not power:
            break
        out = out + power.scale(Fraction(1, factorial(j)))
    return out


def series_log(f: GradedSeries) -> GradedSeries:
    """Ordinary log of 1 + u, u of positive degree: sum (-1)^{j+1} u^j / j."""
    if f.degree_part(0).terms != {(0, ()): ONE}:
        raise ValueError("log requires the degree-0 part to be exactly 1")
    u = f - GradedSeries.one(f.D)
    out = GradedSeries._raw({}, f.D)
    power = GradedSeries.one(f.D)
    for j in range(1, f.D + 1):
        power = power * u
        if not power:
            break
        out = out + power.scale(Fraction((-1) ** (j + 1), j))
    return out


def pleth_exp(f: GradedSeries) -> GradedSeries:
    """Exp(f) = sum_n h_n o f, evaluated as exp(sum_k (p_k o f) / k)."""
    _require_positive(f, "Exp")
    x = GradedSeries._raw({}, f.D)
    for k in range(1, f.D + 1):
        pk = f.adams(k)
        if pk:
            x = x + pk.scale(Fraction(1, k))
    return series_exp(x)


def pleth_exp_direct(f: GradedSeries) -> GradedSeries:
    """Exp(f) summed literally as sum_{n<=D} h_n o f (slow reference route)."""
    _require_positive(f, "Exp")
    out = GradedSeries.one(f.D)
    for n in range(1, f.D + 1):
        out = out + plethysm_outer(h_in_p(n), f)
    return out


def pleth_log(f: GradedSeries) -> GradedSeries:
    """Log(f) = sum_n mu(n)/n log(p_n o f); inverse of pleth_exp."""
    if f.degree_part(0).terms != {(0, ()): ONE}:
        raise ValueError("Log requires constant term 1 and no other degree-0 terms")
    out = GradedSeries._raw({}, f.D)
    for n in range(1, f.D + 1):
        m = mobius(n)
        if not m:
            continue
        pn = f.adams(n)
        out = out + series_log(pn).scale(Fraction(m, n))
    return out


def _derivative(mu: Tuple[int, ...], n: int, times: int):
    """d^times/dp_n^times of p_mu: (coefficient, remaining partition) or None."""
    r = mu.count(n)
    if r < times:
        return None
    coeff = 1
    for i in range(times):
        coeff *= r - i
    rest = list(mu)
    for _ in range(times):
        rest.remove(n)
    return coeff, tuple(rest)


def laplacian(f: GradedSeries) -> GradedSeries:
    """Delta = sum_n hbar^n ((n/2) d^2/dp_n^2 + d/dp_{2n})."""
    out: Dict[Key, LPoly] = {}

    def add(key: Key, v: LPoly) -> None:
        if key in out:
            out[key] = out[key] + v
        else:
            out[key] = v

    for (a, mu), c in f.terms.items():
        for n in set(mu):
            d = _derivative(mu, n, 2)
            if d is not None:
                k, rest = d
                add((a + n, rest), c * Fraction(n * k, 2))
            if n % 2 == 0:
                d = _derivative(mu, n, 1)
                k, rest = d
                add((a + n // 2, rest), c * k)
    return GradedSeries._raw({k: v for k, v in out.items() if v}, f.D)


def exp_laplacian(f: GradedSeries) -> GradedSeries:
    """exp(Delta) f = sum_k Delta^k f / k!."""
    max_weight = max((sum(mu) for _, mu in f.terms), default=0)
    bound = max_weight // 2 + 1
    out = f
    current = f
    k = 0
    while True:
        current = laplacian(current)
        if not current:
            break
        k += 1
        if k > bound:
            raise AssertionError("Laplacian failed to terminate within the weight bound")
        out = out + current.scale(Fraction(1, factorial(k)))
    return out


def gk_transform(char_v: GradedSeries) -> GradedSeries:
    """Char(MV) = Log(exp(Delta) Exp(Char V))."""
    return pleth_log(exp_laplacian(pleth_exp(char_v)))


def series_from_terms(items: Iterable[Tuple[int, Tuple[int, ...], object]], D: int = 6) -> GradedSeries:
    """Convenience constructor from (hbar_exp, mu, coefficient) triples."""
    out: Dict[Key, object] = {}
    for a, mu, c in items:
        key = (a, tuple(Partition.from_parts(mu)))
        out[key] = as_lpoly(out.get(key, ZERO)) + as_lpoly(c)
    return GradedSeries(out, D)
