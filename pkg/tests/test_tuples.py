from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from gkcount.curvecount.tuples import (
    T_lambda_arr,
    T_lambda_poly_P1,
    closed_points_P1,
    lambda_tuples_from_point_counts,
    symbolic_Tlambda_in_traces,
    trace_moment_expansion,
    trace_symbols,
)
from gkcount.ffield import FieldSpec
from gkcount.symcore import LPoly, divisors, mobius, partitions

ALL_UP_TO_8 = [lam for n in range(1, 9) for lam in partitions(n)]


def frobenius_orbits_P1(q, d):
    """Sizes of Frobenius orbits on P^1(F_{q^d}) (affine part; infinity is rational)."""
    F = FieldSpec(q).ext(d)
    seen, sizes = set(), [1]
    for x in range(F.order):
        if x in seen:
            continue
        orbit = {x}
        y = F.pow(x, q)
        while y != x:
            orbit.add(y)
            y = F.pow(y, q)
        seen |= orbit
        sizes.append(len(orbit))
    return sizes


def test_closed_points_examples():
    for q in (2, 3, 4, 5):
        assert closed_points_P1(1, q) == q + 1
        assert closed_points_P1(2, q) == (q * q - q) // 2
    assert sum(1 for s in frobenius_orbits_P1(3, 2) if s == 2) == closed_points_P1(2, 3) == 3
    # irreducible monic cubics over F_2 are the cubics without roots
    irreducible = [c for c in product((0, 1), repeat=3)
                   if all((x**3 + c[2] * x * x + c[1] * x + c[0]) % 2 for x in (0, 1))]
    assert len(irreducible) == closed_points_P1(3, 2) == 2


@pytest.mark.parametrize("d", range(1, 7))
def test_closed_points_polynomial(d):
    poly = closed_points_P1(d, LPoly([0, 1]))
    for q in (2, 3, 4, 5, 7):
        assert poly(q) == closed_points_P1(d, q)


def test_lambda_tuple_examples():
    assert lambda_tuples_from_point_counts((1,), [7]) == 7
    assert lambda_tuples_from_point_counts((2,), [4, 10]) == 6
    assert lambda_tuples_from_point_counts((1, 1, 2), [4, 10]) == 72


def test_lambda_tuple_enumeration_on_P1_over_F9():
    F = FieldSpec(3).ext(2)
    pts = list(range(F.order)) + ["inf"]
    frob = {x: F.pow(x, 3) for x in range(F.order)}
    frob["inf"] = "inf"
    rational = [x for x in pts if frob[x] == x]
    quadratic = [x for x in pts if frob[x] != x]
    count = sum(1 for x1, x2, y in product(rational, rational, quadratic) if x1 != x2)
    assert count == 72


def test_inconsistent_counts_rejected():
    with pytest.raises(ValueError):
        lambda_tuples_from_point_counts((2,), [4, 5])
    with pytest.raises(ValueError):
        lambda_tuples_from_point_counts((3,), [4, 10])


@pytest.mark.parametrize("lam", ALL_UP_TO_8[:15], ids=str)
def test_P1_polynomial_matches_counts(lam):
    poly = T_lambda_poly_P1(lam)
    for q in (2, 3, 5):
        N = [q**d + 1 for d in range(1, lam[0] + 1)]
        assert poly(q) == lambda_tuples_from_point_counts(lam, N)


def test_array_route_matches_scalar():
    # rows are P^1 over different fields, so every row is a consistent set of point counts
    qs = np.array([2, 3, 4, 5, 7, 8, 9])
    N = {d: qs**d + 1 for d in range(1, 5)}
    for lam in partitions(4):
        arr = T_lambda_arr(lam, N)
        for i, q in enumerate(qs):
            assert int(arr[i]) == lambda_tuples_from_point_counts(lam, [int(q)**d + 1 for d in range(1, 5)])


def test_trace_expansion_small_cases():
    q = sympy.Symbol("q")
    a1, a2 = trace_symbols(2)
    assert symbolic_Tlambda_in_traces((1,)).as_expr() == sympy.expand(q + 1 - a1)
    assert symbolic_Tlambda_in_traces((2,)).as_expr() == sympy.expand(q**2 - q + a1 - a2)
    assert symbolic_Tlambda_in_traces((1, 1)).as_expr() == sympy.expand((q + 1 - a1) * (q - a1))


@pytest.mark.parametrize("lam", ALL_UP_TO_8, ids=str)
def test_leading_term_law(lam):
    # raises if the top-weight part is not (-1)^len(lam) a_{lam_1} ... a_{lam_nu}
    poly = symbolic_Tlambda_in_traces(tuple(lam))
    assert poly.total_degree() >= 1


def product_formula(lam, N):
    """prod_m m^r B_m (B_m - 1) ... (B_m - r + 1) with rational B_m, no consistency checks."""
    out = Fraction(1)
    for m, r in lam.multiplicities().items():
        B = Fraction(sum(mobius(m // d) * N[d] for d in divisors(m)), m)
        for i in range(r):
            out *= m * (B - i)
    return out


@given(st.sampled_from([lam for lam in ALL_UP_TO_8 if lam.weight <= 5]), st.sampled_from([3, 5, 7]),
       st.lists(st.integers(-6, 6), min_size=5, max_size=5))
def test_moment_expansion_evaluates_T(lam, q, traces):
    N = {d: q**d + 1 - traces[d - 1] for d in range(1, 6)}
    expansion = trace_moment_expansion(tuple(lam), q)
    value = Fraction(0)
    for kappa, c in expansion.items():
        term = c
        for i in kappa:
            term *= traces[i - 1]
        value += term
    assert value == product_formula(lam, N)
