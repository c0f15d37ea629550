"""Equivariant counts for M_{0,n}.

Every genus-0 curve over F_q with a rational divisor is P^1 and PGL_2(F_q)
acts freely on tuples of at least three distinct points, so

    |M_{0,n}^(sigma F)| = T_lam(P^1) / (q^3 - q)

as an exact polynomial identity in q.
"""

from __future__ import annotations

from itertools import product
from typing import List

import numpy as np

from ..ffield import INF, FieldSpec
from ..symcore import LPoly, Partition, partitions
from .equivariant import equivariant_coeffs
from .records import SpaceId, TracePolynomial
from .tuples import T_lambda_poly_P1


def pgl2_order_poly() -> LPoly:
    return LPoly((0, -1, 0, 1))


def genus0_count_poly(lam) -> LPoly:
    """|M_{0,n}^(sigma F_q)| for sigma of cycle type lam, as a polynomial in q."""
    lam = Partition.from_parts(lam)
    if lam.weight < 3:
        raise ValueError("M_{0,n} needs n >= 3")
    quot, rem = divmod(T_lambda_poly_P1(lam), pgl2_order_poly())
    if rem or not quot.is_integral():
        raise ArithmeticError(f"genus-0 count for {tuple(lam)} is not an integral polynomial")
    return quot


def genus0_trace(n: int) -> List[TracePolynomial]:
    """Per-lam trace polynomials (s_lam coefficients) of M_{0,n}."""
    if not 3 <= n <= 8:
        raise ValueError("genus-0 traces are provided for 3 <= n <= 8")
    counts = {mu: genus0_count_poly(mu) for mu in partitions(n)}
    space = SpaceId("M", 0, n)
    out = []
    for lam, poly in equivariant_coeffs(counts, n).items():
        if not poly.is_integral():
            raise ArithmeticError(f"M_0,{n} coefficient for {tuple(lam)} is not integral")
        out.append(TracePolynomial(space, lam, poly, validated=True))
    return out


# -- brute-force orbit oracle ------------------------------------------------------


def _pgl2_elements(q: int):
    F = FieldSpec(q).base
    out = []
    for a, b, c, d in product(range(q), repeat=4):
        det = F.sub(F.mul(a, d), F.mul(b, c))
        if det == 0:
            continue
        # normalise: first nonzero entry equal to 1
        lead = a if a else b
        inv = F.inv(lead)
        m = tuple(F.mul(x, inv) for x in (a, b, c, d))
        out.append(m)
    return sorted(set(out))


def _mobius_apply(F, emb, m, x):
    a, b, c, d = (int(emb[v]) for v in m)
    if x is INF:
        return INF if c == 0 else F.div(a, c)
    num = F.add(F.mul(a, x), b)
    den = F.add(F.mul(c, x), d)
    if den == 0:
        return INF
    return F.div(num, den)


def brute_force_orbit_count(lam, q: int) -> int:
    """Number of PGL_2(F_q)-orbits on lam-tuples of distinct points of P^1.

    Points live in F_{q^e} with e = lcm(lam); orbits are found by explicit
    canonicalisation under the group, independently of the mass formula.
    """
    lam = Partition.from_parts(lam)
    e = int(np.lcm.reduce(list(lam))) if lam else 1
    spec = FieldSpec(q)
    F = spec.ext(e)
    emb = spec.embedding(e)
    group = _pgl2_elements(q)
    # conjugate m-tuples realised inside F_{q^e}
    per_part = {}
    for m in set(lam):
        sub = set(int(x) for x in F.subfield_elements(m))
        cands = []
        for x in sub:
            orbit = [x]
            y = F.pow(x, q)
            while y != x:
                orbit.append(y)
                y = F.pow(y, q)
            if len(orbit) == m:
                cands.append(tuple(orbit))
        if m == 1:
            cands.append((INF,))
        per_part[m] = cands
    key = lambda t: tuple((-1 if x is INF else x) for x in t)
    seen = set()
    orbits = 0
    for choice in product(*(per_part[m] for m in lam)):
        flat = tuple(x for block in choice for x in block)
        if len(set(flat)) != len(flat):
            continue
        k = key(flat)
        if k in seen:
            continue
        orbits += 1
        for g in group:
            seen.add(key(tuple(_mobius_apply(F, emb, g, x) for x in flat)))
    return orbits
