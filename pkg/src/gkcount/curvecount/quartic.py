"""Equivariant counts for Q_n: smooth plane quartics with marked points.

Non-hyperelliptic genus-3 curves are exactly the smooth plane quartics, up
to PGL_3.  Summing T_lam over all nonzero smooth quartic forms and dividing
by |GL_3(F_q)| = (q-1) |PGL_3(F_q)| gives the groupoid count.  Forms are
grouped into orbits under substitutions and scalings first, so smoothness
and point counts are only computed once per orbit.

Smoothness means no common zero of F, F_x, F_y, F_z over the algebraic
closure.  It is decided either by scanning P^2(F_{q^d}) for d <= 9 (a
zero-dimensional singular scheme of degree <= 9 has a closed point of
degree <= 9) or by a Groebner basis test of the ideal (F, F_x, F_y, F_z).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..ffield import GF, UnsupportedOperation, is_prime
from ..symcore import Partition
from .records import CountRecord, SpaceId
from .tuples import T_lambda_arr

MONOMIALS: Tuple[Tuple[int, int, int], ...] = tuple(
    (a, b, 4 - a - b) for a in range(4, -1, -1) for b in range(4 - a, -1, -1)
)
SUPPORTED_Q = (2, 3)
_POINT_CHUNK = 8192


def pgl3_order(q: int) -> int:
    return q**3 * (q**3 - 1) * (q**2 - 1)


def gl3_order(q: int) -> int:
    return (q - 1) * pgl3_order(q)


def _check_q(q: int) -> None:
    if q not in SUPPORTED_Q:
        raise UnsupportedOperation(f"quartic census supports q in {SUPPORTED_Q}")


def encode(coeffs: Sequence[int], q: int) -> int:
    return sum(int(c) * q**j for j, c in enumerate(coeffs))


def decode(idx, q: int) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    out = np.empty(idx.shape + (15,), dtype=np.int64)
    rest = idx.copy()
    for j in range(15):
        out[..., j] = rest % q
        rest //= q
    return out


# -- points of P^2 over extensions ------------------------------------------------------


@lru_cache(maxsize=None)
def _field(q: int, d: int) -> GF:
    return GF(q, d)


@lru_cache(maxsize=None)
def projective_points(q: int, d: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Normalised points of P^2(F_{q^d}): (1, y, z), (0, 1, z), (0, 0, 1)."""
    Q = q**d
    ys, zs = np.meshgrid(np.arange(Q), np.arange(Q), indexing="ij")
    X = np.concatenate([np.ones(Q * Q), np.zeros(Q), [0]]).astype(np.int64)
    Y = np.concatenate([ys.ravel(), np.ones(Q), [0]]).astype(np.int64)
    Z = np.concatenate([zs.ravel(), np.arange(Q), [1]]).astype(np.int64)
    return X, Y, Z


def _monomial_values(F: GF, X, Y, Z, exps) -> np.ndarray:
    """Field values of x^a y^b z^c at the given points, shape (len(exps), npts)."""
    out = np.empty((len(exps), len(X)), dtype=np.int64)
    for j, (a, b, c) in enumerate(exps):
        v = F.mul_arr(F.mul_arr(F.pow_arr(X, a), F.pow_arr(Y, b)), F.pow_arr(Z, c))
        out[j] = v
    return out


def _derivative_table(var: int):
    """Rows: for each monomial, (coefficient, exponent of the derivative)."""
    rows = []
    for m in MONOMIALS:
        e = list(m)
        c = e[var]
        if c:
            e[var] -= 1
        rows.append((c, tuple(e)))
    return rows


def _linear_forms(q: int, d: int, X, Y, Z, with_partials: bool) -> np.ndarray:
    """Matrix sending a coefficient vector to the F_q-digits of F (and partials).

    Shape (15, npts * d * k) with k = 1 (F, F_x, F_y, F_z blocks stacked when
    ``with_partials``).  q is prime, so F_q coefficients act on digits directly.
    """
    F = _field(q, d)
    mono = _monomial_values(F, X, Y, Z, MONOMIALS)
    blocks = [F.digit_matrix(mono).reshape(15, -1)]
    if with_partials:
        for var in range(3):
            rows = _derivative_table(var)
            exps = [e if c else (0, 0, 0) for c, e in rows]
            vals = _monomial_values(F, X, Y, Z, exps)
            coeffs = np.array([c % q for c, _ in rows])
            vals = np.where(coeffs[:, None] == 0, 0, vals)
            dig = F.digit_matrix(vals) * coeffs[:, None, None]
            blocks.append(dig.reshape(15, -1))
    return np.concatenate(blocks, axis=1).astype(np.float64)


def _zero_mask(coeffs: np.ndarray, mat: np.ndarray, q: int, d: int, npts: int, nblocks: int) -> np.ndarray:
    """Boolean (nforms, nblocks, npts): value of each block polynomial is zero."""
    vals = np.mod(coeffs @ mat, q).reshape(len(coeffs), nblocks, npts, d)
    return ~vals.any(axis=3)


def singular_by_scan(coeffs: np.ndarray, q: int, max_degree: int = 9) -> np.ndarray:
    """True where the form has a singular point over F_{q^d} for some d <= max_degree."""
    coeffs = np.asarray(coeffs, dtype=np.float64).reshape(-1, 15)
    singular = np.zeros(len(coeffs), dtype=bool)
    for d in range(1, max_degree + 1):
        X, Y, Z = projective_points(q, d)
        for s in range(0, len(X), _POINT_CHUNK):
            active = np.flatnonzero(~singular)
            if not len(active):
                return singular
            sl = slice(s, s + _POINT_CHUNK)
            mat = _linear_forms(q, d, X[sl], Y[sl], Z[sl], with_partials=True)
            npts = len(X[sl])
            for lo in range(0, len(active), 256):
                idx = active[lo:lo + 256]
                z = _zero_mask(coeffs[idx], mat, q, d, npts, 4)
                singular[idx] |= z.all(axis=1).any(axis=1)
    return singular


_x, _y, _z = sympy.symbols("x y z")


def form_expr(coeffs: Sequence[int]):
    return sum(int(c) * _x**a * _y**b * _z**c_ for c, (a, b, c_) in zip(coeffs, MONOMIALS) if c)


def singular_by_groebner(coeffs: Sequence[int], q: int) -> bool:
    """Exact test: (F, F_x, F_y, F_z) is irrelevant iff every variable has a pure-power leader."""
    if not is_prime(q):
        raise UnsupportedOperation("Groebner test implemented over prime fields")
    Fe = form_expr(coeffs)
    if Fe == 0:
        return True
    gens = [Fe, sympy.diff(Fe, _x), sympy.diff(Fe, _y), sympy.diff(Fe, _z)]
    gens = [sympy.Poly(g, _x, _y, _z, modulus=q) for g in gens]
    gens = [g for g in gens if not g.is_zero]
    G = sympy.groebner(gens, _x, _y, _z, modulus=q, order="grevlex")
    pure = [False, False, False]
    for g in G.exprs:
        lm = sympy.Poly(g, _x, _y, _z, modulus=q).monoms(order="grevlex")[0]
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            pure[nz[0]] = True
        if not any(lm):
            return False
    return not all(pure)


def is_smooth(coeffs: Sequence[int], q: int, method: str = "auto") -> bool:
    """``auto`` is the census default: full scan at q=2, short scan then Groebner otherwise."""
    if method == "auto":
        method = "scan" if q == 2 else "scan+groebner"
    if method == "scan":
        return not bool(singular_by_scan(np.array([coeffs]), q)[0])
    if method == "scan+groebner":
        if singular_by_scan(np.array([coeffs]), q, 3)[0]:
            return False
        return not singular_by_groebner(coeffs, q)
    if method == "groebner":
        return not singular_by_groebner(coeffs, q)
    raise ValueError(f"unknown smoothness method {method!r}")


def point_counts(coeffs: np.ndarray, q: int, d: int) -> np.ndarray:
    """#C(F_{q^d}) for each form (rows of coeffs)."""
    coeffs = np.asarray(coeffs, dtype=np.float64).reshape(-1, 15)
    X, Y, Z = projective_points(q, d)
    out = np.zeros(len(coeffs), dtype=np.int64)
    for s in range(0, len(X), _POINT_CHUNK):
        sl = slice(s, s + _POINT_CHUNK)
        mat = _linear_forms(q, d, X[sl], Y[sl], Z[sl], with_partials=False)
        for lo in range(0, len(coeffs), 1024):
            z = _zero_mask(coeffs[lo:lo + 1024], mat, q, d, len(X[sl]), 1)
            out[lo:lo + 1024] += z[:, 0, :].sum(axis=1)
    return out


# -- orbits under substitution and scaling ------------------------------------------------


def _poly_mul(a: Dict, b: Dict, q: int) -> Dict:
    out: Dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % q
    return {e: c for e, c in out.items() if c}


def substitution_matrix(g: Sequence[Sequence[int]], q: int) -> np.ndarray:
    """A with (F o g) coefficients = A @ (F coefficients), for (x,y,z) -> g (x,y,z)."""
    lin = []
    for row in g:
        lin.append({e: c % q for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), row) if c % q})
    pos = {m: i for i, m in enumerate(MONOMIALS)}
    A = np.zeros((15, 15), dtype=np.int64)
    for j, (a, b, c) in enumerate(MONOMIALS):
        poly = {(0, 0, 0): 1}
        for var, e in enumerate((a, b, c)):
            for _ in range(e):
                poly = _poly_mul(poly, lin[var], q)
        for mon, coef in poly.items():
            A[pos[mon], j] = coef
    return A


def _primitive_root(q: int) -> int:
    for w in range(1, q):
        if len({pow(w, i, q) for i in range(1, q)}) == q - 1:
            return w
    raise ValueError("no primitive root")


def group_generators(q: int) -> List[np.ndarray]:
    """Generators of GL_3(F_q) acting by substitution, plus scaling by a primitive root."""
    w = _primitive_root(q)
    mats = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[w, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]
    gens = [substitution_matrix(m, q) for m in mats]
    gens.append(np.eye(15, dtype=np.int64) * w % q)
    return gens


def _permutation(A: np.ndarray, q: int, chunk: int = 1 << 20) -> np.ndarray:
    total = q**15
    perm = np.empty(total, dtype=np.int32 if total < 2**31 else np.int64)
    weights = np.array([q**j for j in range(15)], dtype=np.int64)
    At = A.T.astype(np.float64)
    for s in range(0, total, chunk):
        idx = np.arange(s, min(total, s + chunk), dtype=np.int64)
        c = decode(idx, q).astype(np.float64)
        img = np.mod(np.rint(c @ At), q).astype(np.int64)
        perm[s:s + len(idx)] = img @ weights
    return perm


def orbit_labels(q: int) -> np.ndarray:
    """labels[i] = least index in the orbit of form i (pointer-jumping propagation)."""
    perms = [_permutation(A, q) for A in group_generators(q)]
    labels = np.arange(q**15, dtype=perms[0].dtype)
    while True:
        old = labels
        new = labels
        for p in perms:
            new = np.minimum(new, new[p])
        new = new[new]
        new = new[new]
        labels = new
        if np.array_equal(old, labels):
            return labels


class QuarticCensus:
    """Orbit representatives of smooth quartic forms with their point counts."""

    def __init__(self, q: int, smoothness: Optional[str] = None, scan_degree: Optional[int] = None):
        _check_q(q)
        self.q = q
        labels = orbit_labels(q)
        reps, sizes = np.unique(labels, return_counts=True)
        keep = reps != 0
        reps, sizes = reps[keep].astype(np.int64), sizes[keep]
        del labels
        coeffs = decode(reps, q)
        method = smoothness or ("scan" if q == 2 else "scan+groebner")
        if method == "scan":
            singular = singular_by_scan(coeffs, q, scan_degree or 9)
        elif method == "scan+groebner":
            singular = singular_by_scan(coeffs, q, scan_degree or 3)
            for i in np.flatnonzero(~singular):
                singular[i] = singular_by_groebner(coeffs[i], q)
        elif method == "groebner":
            singular = np.array([singular_by_groebner(c, q) for c in coeffs])
        else:
            raise ValueError(f"unknown smoothness method {method!r}")
        self.orbit_count = len(reps)
        self.reps = reps[~singular]
        self.sizes = sizes[~singular].astype(np.int64)
        smooth_coeffs = coeffs[~singular]
        self.N = {d: point_counts(smooth_coeffs, q, d) for d in (1, 2)}

    def smooth_forms(self) -> int:
        return int(self.sizes.sum())

    def count(self, lam) -> Fraction:
        lam = Partition.from_parts(lam)
        if lam.weight > 2:
            raise ValueError("quartic counts are provided for |lam| <= 2")
        if not lam:
            T = np.ones(len(self.reps), dtype=np.int64)
        else:
            T = T_lambda_arr(lam, self.N)
        return Fraction(int((T * self.sizes).sum()), gl3_order(self.q))


_CENSUS: Dict[int, QuarticCensus] = {}


def quartic_census(q: int) -> QuarticCensus:
    if q not in _CENSUS:
        _CENSUS[q] = QuarticCensus(q)
    return _CENSUS[q]


def quartic_count(q: int, lam) -> CountRecord:
    _check_q(q)
    lam = Partition.from_parts(lam)
    return CountRecord(SpaceId("Q", 3, lam.weight), q, lam, quartic_census(q).count(lam))


# -- truncated sieve for a single marked point ----------------------------------------------


def projective_space_size(k: int, q: int) -> int:
    return (q ** (k + 1) - 1) // (q - 1)


def sieve_s2p_point(q: int) -> int:
    """Sieve value through singularities at up to two points, P = {p_1}."""
    P = lambda k: projective_space_size(k, q)
    val = (
        P(13) - P(11) - (q**2 + q) * P(10) - Fraction(q**4 - q, 2) * P(7)
        + (q**2 + q) * P(8) + Fraction((q**2 + q) * (q**2 + q - 1), 2) * P(7)
    )
    assert val.denominator == 1
    return int(val)


def sieve_s2p_bruteforce(q: int) -> int:
    """sum over quartics through p_1 = [1:0:0] of 1 - n_1 + C(n_1, 2) - n_2.

    n_1 counts rational singular points and n_2 conjugate pairs of singular
    points; every projective class of nonzero forms is visited once.
    """
    _check_q(q)
    # coefficient of x^4 is the value at [1:0:0]
    idx = np.arange(q**14, dtype=np.int64) * q
    coeffs = decode(idx, q)[1:]
    sing = {}
    for d in (1, 2):
        X, Y, Z = projective_points(q, d)
        mat = _linear_forms(q, d, X, Y, Z, with_partials=True)
        total = np.zeros(len(coeffs), dtype=np.int64)
        for lo in range(0, len(coeffs), 2048):
            z = _zero_mask(coeffs[lo:lo + 2048].astype(np.float64), mat, q, d, len(X), 4)
            total[lo:lo + 2048] = z.all(axis=1).sum(axis=1)
        sing[d] = total
    n1 = sing[1]
    n2 = (sing[2] - sing[1]) // 2
    terms = 1 - n1 + n1 * (n1 - 1) // 2 - n2
    total = int(terms.sum())
    assert total % (q - 1) == 0
    return total // (q - 1)
