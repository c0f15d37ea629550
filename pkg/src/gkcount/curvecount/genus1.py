"""Equivariant counts for M_{1,n} by a census of Weierstrass models.

Every smooth (a1, a2, a3, a4, a6) in F_q^5 is an elliptic curve; each
isomorphism class of (E, O) appears (q-1) q^3 / |Aut(E, O)| times.  For the
bare genus-1 curve the k-automorphism group also contains the N_1
translations, so a lam-tuple count T_lam contributes T_lam / N_1 and the
total is divided by (q-1) q^3.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Optional

import numpy as np

from ..ffield import FieldSpec, GF
from ..symcore import Partition, partitions
from .records import CountRecord, SpaceId
from .tuples import T_lambda_arr, lambda_tuples_from_point_counts


def _c(F: GF, n: int) -> int:
    return F.from_int(n)


def weierstrass_tuples(q: int):
    """All coefficient tuples as five flat arrays of field elements."""
    grids = np.indices((q,) * 5).reshape(5, -1)
    return tuple(grids[i].astype(np.int64) for i in range(5))


def discriminant_arr(F: GF, a1, a2, a3, a4, a6):
    """Discriminant of the long Weierstrass form, valid in every characteristic."""
    mul, add, sub = F.mul_arr, F.add_arr, F.sub_arr
    c = lambda n: np.full_like(a1, _c(F, n))
    b2 = add(mul(a1, a1), mul(c(4), a2))
    b4 = add(mul(c(2), a4), mul(a1, a3))
    b6 = add(mul(a3, a3), mul(c(4), a6))
    b8 = sub(
        add(add(mul(mul(a1, a1), a6), mul(c(4), mul(a2, a6))), mul(a2, mul(a3, a3))),
        add(mul(a1, mul(a3, a4)), mul(a4, a4)),
    )
    t1 = mul(mul(b2, b2), b8)
    t2 = mul(c(8), mul(b4, mul(b4, b4)))
    t3 = mul(c(27), mul(b6, b6))
    t4 = mul(c(9), mul(b2, mul(b4, b6)))
    return sub(t4, add(add(t1, t2), t3))


def _y_solution_table(F: GF) -> np.ndarray:
    """table[b, c] = #{y : y^2 + b y = c}."""
    Q = F.order
    ys = np.arange(Q)
    table = np.zeros((Q, Q), dtype=np.int64)
    for b in range(Q):
        vals = F.add_arr(F.mul_arr(ys, ys), F.mul_arr(np.full(Q, b), ys))
        table[b] = np.bincount(vals, minlength=Q)
    return table


def affine_point_count(F: GF, a1, a2, a3, a4, a6) -> np.ndarray:
    """Number of affine solutions of the Weierstrass equation over F."""
    table = _y_solution_table(F)
    count = np.zeros_like(a1)
    for x in range(F.order):
        xs = np.full_like(a1, x)
        x2 = F.mul(x, x)
        x3 = F.mul(x2, x)
        b = F.add_arr(F.mul_arr(a1, xs), a3)
        c = F.add_arr(
            F.add_arr(np.full_like(a1, x3), F.mul_arr(a2, np.full_like(a1, x2))),
            F.add_arr(F.mul_arr(a4, xs), a6),
        )
        count += table[b, c]
    return count


class Genus1Census:
    """Smooth Weierstrass models over F_q with their traces of Frobenius."""

    def __init__(self, q: int, max_n: int = 6):
        self.q = q
        self.max_n = max_n
        spec = FieldSpec(q)
        F = spec.base
        coeffs = weierstrass_tuples(q)
        smooth = discriminant_arr(F, *coeffs) != 0
        self.coeffs = tuple(c[smooth] for c in coeffs)
        self.N1 = affine_point_count(F, *self.coeffs) + 1
        a = {0: np.full_like(self.N1, 2), 1: q + 1 - self.N1}
        for d in range(2, max_n + 1):
            a[d] = a[1] * a[d - 1] - q * a[d - 2]
        self.traces = a
        self.N = {d: q**d + 1 - a[d] for d in range(1, max_n + 1)}

    def group_order(self) -> int:
        return (self.q - 1) * self.q**3

    def count(self, lam) -> Fraction:
        lam = Partition.from_parts(lam)
        if not lam:
            raise ValueError("M_{1,0} is not stable; lam must be nonempty")
        if lam.weight > self.max_n:
            raise ValueError(f"census built for |lam| <= {self.max_n}")
        T = T_lambda_arr(lam, self.N)
        if np.any(T % self.N1):
            raise ArithmeticError("translations do not act freely on lam-tuples")
        total = int((T // self.N1).sum())
        return Fraction(total, self.group_order())


_CENSUS: Dict[int, Genus1Census] = {}


def census(q: int) -> Genus1Census:
    if q not in _CENSUS:
        _CENSUS[q] = Genus1Census(q)
    return _CENSUS[q]


def genus1_count(q: int, lam) -> CountRecord:
    lam = Partition.from_parts(lam)
    if not lam:
        raise ValueError("M_{1,0} is not stable; lam must be nonempty")
    if lam.weight > 6:
        raise ValueError("genus-1 counts are provided for 1 <= |lam| <= 6")
    return CountRecord(SpaceId("M", 1, lam.weight), q, lam, census(q).count(lam))


def genus1_counts(q: int, n: int) -> Dict[Partition, Fraction]:
    c = census(q)
    return {mu: c.count(mu) for mu in partitions(n)}


def extension_point_counts(q: int, d: int, coeffs: Optional[Iterable[np.ndarray]] = None) -> np.ndarray:
    """N_d counted directly over F_{q^d} for every smooth model over F_q."""
    spec = FieldSpec(q)
    c = census(q).coeffs if coeffs is None else tuple(coeffs)
    emb = spec.embedding(d)
    big = spec.ext(d)
    return affine_point_count(big, *(emb[x] for x in c)) + 1


# -- brute-force oracle with explicit automorphisms ------------------------------


def _admissible_changes(F: GF):
    q = F.order
    for u in range(1, q):
        for r in range(q):
            for s in range(q):
                for t in range(q):
                    yield u, r, s, t


def transform(F: GF, a, change):
    """Coefficients after x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
    a1, a2, a3, a4, a6 = a
    u, r, s, t = change
    mul, add, sub = F.mul, F.add, F.sub
    c = lambda n: F.from_int(n)
    ui = F.inv(u)
    u2 = mul(ui, ui)
    u3 = mul(u2, ui)
    u4 = mul(u2, u2)
    u6 = mul(u4, u2)
    n1 = mul(add(a1, mul(c(2), s)), ui)
    n2 = mul(add(sub(a2, mul(s, a1)), sub(mul(c(3), r), mul(s, s))), u2)
    n3 = mul(add(a3, add(mul(r, a1), mul(c(2), t))), u3)
    # a4' = a4 - s a3 + 2 r a2 - (t + r s) a1 + 3 r^2 - 2 s t
    n4 = add(
        sub(sub(add(sub(a4, mul(s, a3)), mul(c(2), mul(r, a2))), mul(add(t, mul(r, s)), a1)), mul(c(2), mul(s, t))),
        mul(c(3), mul(r, r)),
    )
    n4 = mul(n4, u4)
    # a6' = a6 + r a4 + r^2 a2 + r^3 - t a3 - t^2 - r t a1
    r2 = mul(r, r)
    n6 = add(add(add(a6, mul(r, a4)), mul(r2, a2)), mul(r2, r))
    n6 = sub(sub(sub(n6, mul(t, a3)), mul(t, t)), mul(mul(r, t), a1))
    n6 = mul(n6, u6)
    return (n1, n2, n3, n4, n6)


def brute_force_genus1_count(q: int, lam) -> Fraction:
    """Sum over isomorphism classes of (E, O) of T_lam / (N_1 |Aut(E, O)|).

    Classes and automorphism groups are found by applying every coordinate
    change explicitly; point counts are taken by direct enumeration over
    F_{q^d} for each d needed.  Only practical for q <= 3.
    """
    lam = Partition.from_parts(lam)
    spec = FieldSpec(q)
    F = spec.base
    coeffs = weierstrass_tuples(q)
    smooth = discriminant_arr(F, *coeffs) != 0
    models = sorted({tuple(int(c[i]) for c in coeffs) for i in np.flatnonzero(smooth)})
    changes = list(_admissible_changes(F))
    seen = set()
    total = Fraction(0)
    top = lam[0] if lam else 1
    for model in models:
        if model in seen:
            continue
        images = [transform(F, model, ch) for ch in changes]
        orbit = set(images)
        seen |= orbit
        aut = sum(1 for im in images if im == model)
        N = {}
        for d in range(1, top + 1):
            big = spec.ext(d)
            emb = spec.embedding(d)
            arrs = [np.array([emb[x]]) for x in model]
            N[d] = int(affine_point_count(big, *arrs)[0]) + 1
        T = lambda_tuples_from_point_counts(lam, N)
        total += T / (N[1] * aut)
    return total
