"""Property checks and random generators shared by the unit and acceptance suites."""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from hypothesis import strategies as st

from gkcount.plethys import (
    GradedSeries,
    laplacian,
    plethysm_outer,
    pleth_exp,
    pleth_exp_direct,
    pleth_log,
    term_degree,
)
from gkcount.symcore import LPoly, SymPolynomial, character, class_size, partitions


# -- generators ---------------------------------------------------------------------


def random_lpoly(rng: random.Random, max_deg: int = 2, bound: int = 3) -> LPoly:
    return LPoly([rng.randint(-bound, bound) for _ in range(rng.randint(1, max_deg + 1))])


def random_series(rng: random.Random, D: int = 6, terms: int = 4, min_degree: int = 1) -> GradedSeries:
    """A few terms hbar^a p_mu with total degree in [min_degree, D]; a may be negative."""
    out = {}
    for _ in range(terms):
        deg = rng.randint(min_degree, D)
        a = rng.randint(-1, deg // 2)
        w = deg - 2 * a
        mu = rng.choice(partitions(w)) if w else ()
        out[(a, tuple(mu))] = random_lpoly(rng)
    return GradedSeries(out, D)


@st.composite
def lpolys(draw, max_deg: int = 2, bound: int = 3):
    cs = draw(st.lists(st.integers(-bound, bound), min_size=1, max_size=max_deg + 1))
    return LPoly(cs)


@st.composite
def series(draw, D: int = 6, max_terms: int = 4, min_degree: int = 1):
    n = draw(st.integers(0, max_terms))
    out = {}
    for _ in range(n):
        deg = draw(st.integers(min_degree, D))
        a = draw(st.integers(-1, deg // 2))
        w = deg - 2 * a
        mu = draw(st.sampled_from(partitions(w))) if w else ()
        out[(a, tuple(mu))] = draw(lpolys())
    return GradedSeries(out, D)


@st.composite
def sym_polys(draw, max_weight: int = 3):
    """L-free symmetric functions of positive weight."""
    n = draw(st.integers(1, 3))
    out = {}
    for _ in range(n):
        w = draw(st.integers(1, max_weight))
        mu = draw(st.sampled_from(partitions(w)))
        out[mu] = Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 3)))
    return SymPolynomial(out)


# -- properties ----------------------------------------------------------------------


def log_exp_roundtrip(f: GradedSeries) -> bool:
    return pleth_log(pleth_exp(f)) == f


def exp_log_roundtrip(f: GradedSeries) -> bool:
    one_plus = GradedSeries.one(f.D) + f
    return pleth_exp(pleth_log(one_plus)) == one_plus


def exp_routes_agree(f: GradedSeries) -> bool:
    return pleth_exp(f) == pleth_exp_direct(f)


def exp_is_exponential(f: GradedSeries, g: GradedSeries) -> bool:
    return pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g)


def adams_axioms(f: GradedSeries, g: GradedSeries, c: LPoly, k: int, m: int) -> bool:
    """p_k is additive, multiplicative, L^b -> L^{kb}, and p_k o p_m = p_{km}."""
    D = f.D
    additive = (f + g).adams(k) == f.adams(k) + g.adams(k)
    multiplicative = (f * g).adams(k) == f.adams(k) * g.adams(k)
    scalar = f.scale(c).adams(k) == f.adams(k).scale(c.substitute_power(k))
    composite = f.adams(m).adams(k) == f.adams(k * m)
    pkm = plethysm_outer(SymPolynomial.p(k), plethysm_outer(SymPolynomial.p(m), f))
    via_outer = pkm == plethysm_outer(SymPolynomial.p(k * m), f)
    return additive and multiplicative and scalar and composite and via_outer and D == f.adams(k).D


def outer_plethysm_is_algebra_map(a: SymPolynomial, b: SymPolynomial, f: GradedSeries) -> bool:
    """(a + b) o f = a o f + b o f and (a b) o f = (a o f)(b o f)."""
    add = plethysm_outer(a + b, f) == plethysm_outer(a, f) + plethysm_outer(b, f)
    mul = plethysm_outer(a * b, f) == plethysm_outer(a, f) * plethysm_outer(b, f)
    return add and mul


def laplacian_preserves_degree(f: GradedSeries) -> bool:
    """Every term of Delta(f) has the degree of the term it came from."""
    for key, c in f.terms.items():
        deg = term_degree(*key)
        image = laplacian(GradedSeries({key: c}, f.D))
        if any(term_degree(*k) != deg for k in image.terms):
            return False
    return True


def character_orthogonality(n: int) -> bool:
    """Row and column orthogonality of the character table of S_n."""
    ps = partitions(n)
    nf = factorial(n)
    for lam in ps:
        for nu in ps:
            s = sum(class_size(mu) * character(lam, mu) * character(nu, mu) for mu in ps)
            if s != (nf if lam == nu else 0):
                return False
    for mu in ps:
        for nu in ps:
            s = sum(character(lam, mu) * character(lam, nu) for lam in ps)
            want = nf // class_size(mu) if mu == nu else 0
            if s != want:
                return False
    return True
