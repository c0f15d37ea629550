import numpy as np
import pytest
from hypothesis import given, strategies as st

from gkcount.ffield import (
    GF,
    INF,
    FieldSpec,
    UniPoly,
    UnsupportedOperation,
    eval_at_p1_point,
    is_squarefree,
    least_irreducible,
    prime_power,
)

FIELDS = [(2, 1), (3, 1), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 2)]


def naive_mul(F, a, b):
    """Schoolbook product of digit vectors reduced by the field modulus."""
    p, m = F.p, F.modulus
    da, db = F.digits(a), F.digits(b)
    prod = [0] * (2 * F.k)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, F.k - 1, -1):
        c = prod[i]
        if c:
            for j, mc in enumerate(m):
                prod[i - F.k + j] = (prod[i - F.k + j] - c * mc) % p
    return F.encode(prod[: F.k])


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplication_matches_schoolbook(p, k):
    F = GF(p, k)
    rng = np.random.default_rng(p * 10 + k)
    for a, b in rng.integers(0, F.order, size=(200, 2)):
        assert F.mul(int(a), int(b)) == naive_mul(F, int(a), int(b))


@pytest.mark.parametrize("p,k", FIELDS)
@given(data=st.data())
def test_field_axioms(p, k, data):
    F = GF(p, k)
    el = st.integers(0, F.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1
    assert F.pow(a, F.order) == a


@pytest.mark.parametrize("p,k", [f for f in FIELDS if f[0] != 2])
def test_quadratic_character_routes_agree(p, k):
    F = GF(p, k)
    tab = F.chi_table()
    for a in range(F.order):
        assert F.quadratic_character(a) == F.quadratic_character_euler(a) == tab[a]
    assert (tab == 1).sum() == (tab == -1).sum() == (F.order - 1) // 2


def test_quadratic_character_examples():
    F3 = GF(3)
    assert F3.quadratic_character(0) == 0
    assert F3.quadratic_character(F3.generator) == -1
    F9 = GF(3, 2)
    squares = {F9.mul(x, x) for x in range(1, 9)}
    assert len(squares) == 4
    assert sum(F9.quadratic_character(x) == 1 for x in range(9)) == 4


def test_characteristic_two_has_no_quadratic_character():
    with pytest.raises(UnsupportedOperation):
        GF(2, 2).quadratic_character(1)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_least_irreducible_is_least():
    assert least_irreducible(2, 2) == (1, 1, 1)
    assert least_irreducible(3, 2) == (1, 0, 1)
    assert least_irreducible(2, 3) == (1, 1, 0, 1)


def test_field_size_limit():
    with pytest.raises(UnsupportedOperation):
        GF(2, 21)


@pytest.mark.parametrize("q,d", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (5, 2), (9, 2)])
def test_embedding_is_ring_map(q, d):
    spec = FieldSpec(q)
    small, big, emb = spec.base, spec.ext(d), spec.embedding(d)
    for a in range(q):
        for b in range(q):
            assert emb[small.mul(a, b)] == big.mul(int(emb[a]), int(emb[b]))
            assert emb[small.add(a, b)] == big.add(int(emb[a]), int(emb[b]))
    assert sorted(int(x) for x in emb) == sorted(int(x) for x in big.subfield_elements(spec.k))


@pytest.mark.parametrize("q,a,b", [(2, 2, 2), (3, 2, 2), (3, 1, 3), (2, 3, 2)])
def test_tower_embedding_commutes(q, a, b):
    spec = FieldSpec(q)
    t = spec.tower_embedding(a, b)
    assert all(t[spec.embedding(a)[x]] == spec.embedding(a * b)[x] for x in range(q))
    Fa, Fab = spec.ext(a), spec.ext(a * b)
    for x in range(Fa.order):
        for y in range(Fa.order):
            assert t[Fa.mul(x, y)] == Fab.mul(int(t[x]), int(t[y]))


def test_frobenius_fixes_prime_field():
    F = GF(3, 3)
    fixed = [x for x in range(F.order) if F.frobenius(x) == x]
    assert fixed == [0, 1, 2]


def test_squarefree_examples():
    F3, F5 = GF(3), GF(5)
    assert not is_squarefree(UniPoly(F3, [0, 0, 1]))
    assert is_squarefree(UniPoly(F3, [1, 0, 1]))
    # (x+1)^2 (x+2) = x^3 + 4x^2 + 5x + 2
    assert not is_squarefree(UniPoly(F5, [2, 0, 4, 1]))


def test_eval_at_p1_point():
    F3 = GF(3)
    f = UniPoly(F3, [1, 0, 0, 0, 0, 1])  # x^5 + 1
    assert eval_at_p1_point(f, INF, 2) == 0
    assert eval_at_p1_point(UniPoly(F3, [0] * 6 + [1]), INF, 2) == 1
    assert eval_at_p1_point(f, 2, 2) == 0


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_polynomial_division(a, b):
    F = GF(5)
    A, B = UniPoly(F, a), UniPoly(F, b)
    if B.is_zero():
        return
    quot, rem = A.divmod(B)
    back = [0] * max(len(A.coeffs), 1)
    for i, x in enumerate(quot.coeffs):
        for j, y in enumerate(B.coeffs):
            back[i + j] = (back[i + j] + x * y) % 5
    for i, x in enumerate(rem.coeffs):
        back[i] = (back[i] + x) % 5
    assert UniPoly(F, back) == A
    assert rem.is_zero() or rem.degree < B.degree
