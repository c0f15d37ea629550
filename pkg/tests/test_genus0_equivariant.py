from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gkcount.curvecount.equivariant import (
    PolynomialityError,
    equivariant_coeff,
    equivariant_coeffs,
    interpolate,
    lagrange,
    to_hodge,
)
from gkcount.curvecount.genus0 import brute_force_orbit_count, genus0_count_poly, genus0_trace
from gkcount.curvecount.records import SpaceId, TracePolynomial
from gkcount.symcore import LPoly, Partition, partitions

q = LPoly([0, 1])


def test_genus0_examples():
    assert genus0_count_poly((1, 1, 1)) == LPoly([1])
    assert genus0_count_poly((3,)) == LPoly([1])
    assert genus0_count_poly((1, 1, 1, 1)) == q - 2


@pytest.mark.parametrize("qq", [5, 7])
def test_four_points_brute_force(qq):
    assert brute_force_orbit_count((1, 1, 1, 1), qq) == qq - 2


@pytest.mark.parametrize("qq", [2, 3])
@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_form_matches_orbits(qq, n):
    for lam in partitions(n):
        assert brute_force_orbit_count(lam, qq) == genus0_count_poly(lam)(qq)


@pytest.mark.parametrize("n", range(3, 9))
def test_genus0_traces_are_integral(n):
    traces = genus0_trace(n)
    assert {tp.lam for tp in traces} == set(partitions(n))
    assert all(tp.poly.is_integral() for tp in traces)
    top = max(tp.poly.degree for tp in traces)
    assert top == n - 3


def test_M04_character():
    # P^1 minus three points with S_4 permuting the fibre over the cross-ratio
    coeffs = {tp.lam: tp.poly for tp in genus0_trace(4)}
    assert coeffs[Partition((4,))] == q
    assert coeffs[Partition((2, 2))] == LPoly([-1])
    assert all(not v for k, v in coeffs.items() if k not in ((4,), (2, 2)))


def test_equivariant_coeff_examples():
    assert equivariant_coeff((1,), {Partition((1,)): Fraction(7)}) == 7
    counts = {Partition((1, 1)): 107 + 81, Partition((2,)): 107 - 81}
    assert equivariant_coeffs(counts, 2) == {Partition((2,)): 107, Partition((1, 1)): 81}


@given(st.integers(1, 6), st.integers(-50, 50))
def test_constant_counts_give_trivial_rep(n, c):
    coeffs = equivariant_coeffs({mu: c for mu in partitions(n)}, n)
    assert coeffs[Partition((n,))] == c
    assert all(v == 0 for lam, v in coeffs.items() if lam != Partition((n,)))


def test_equivariant_coeff_missing_counts():
    with pytest.raises(ValueError):
        equivariant_coeff((2,), {Partition((2,)): 1})


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_lagrange_recovers_polynomial(cs):
    P = LPoly(cs)
    nodes = [2, 3, 4, 5, 7]
    assert lagrange([(x, P(x)) for x in nodes]) == P


def test_interpolate_examples():
    space = SpaceId("M", 1, 2)
    tp = interpolate(space, (2,), [(x, x * x) for x in (2, 3, 4)], holdout=(5, 25))
    assert tp.poly == q**2 and tp.validated
    assert to_hodge(tp) == LPoly([0, 0, 1])


def test_interpolate_rejects_corrupted_sample():
    space = SpaceId("M", 1, 2)
    samples = [(x, x * x) for x in (2, 3, 4)]
    samples[1] = (3, 10)
    with pytest.raises(PolynomialityError):
        interpolate(space, (2,), samples, holdout=(5, 25))


def test_interpolate_rejects_excess_degree():
    space = SpaceId("M", 1, 1)
    with pytest.raises(PolynomialityError):
        interpolate(space, (1,), [(x, x**3) for x in (2, 3, 4, 5)], holdout=(7, 343))


def test_to_hodge_needs_validation():
    with pytest.raises(ValueError):
        to_hodge(TracePolynomial(SpaceId("M", 1, 1), Partition((1,)), q))
