"""Equivariant counts for H_{g,n} via binary models y^2 = f(x).

P_g is the set of square-free f in F_q[x] of degree 2g+1 or 2g+2 (any
leading coefficient); each hyperelliptic curve of genus g appears
|GL_2(F_q)| / |Aut| times, so counts are sums over P_g divided by
|GL_2(F_q)|.  The trace of Frobenius on C_f over F_{q^m} is

    a_m(f) = -sum_{alpha in P^1(F_{q^m})} chi_m(f(alpha)),

with f(infinity) the x^(2g+2) coefficient.

Two routes are provided.  ``direct`` enumerates monic f and evaluates them
by F_p-linear algebra at every closed point of P^1.  ``recursive`` expands
T_lam in the traces and reduces every moment to character sums
u_g(alpha_1, ..., alpha_nu), obtained from the closed-form sums U_g over
all polynomials by peeling off square factors.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..ffield import FieldSpec, UnsupportedOperation, prime_power
from ..symcore import Partition, divisors, partitions
from .records import CountRecord, SpaceId
from .tuples import T_lambda_arr, trace_moment_expansion

INF_REP = -1
PointKey = Tuple[int, int]  # (degree e, Frobenius-orbit minimum in F_{q^e}); (1, -1) is infinity
Signature = Tuple[Tuple[PointKey, int], ...]  # sorted ((point, parity)) pairs

_CHUNK_CELLS = 12_000_000


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def _check_q(q: int) -> None:
    p, _ = prime_power(q)
    if p == 2:
        raise UnsupportedOperation("hyperelliptic models need odd characteristic")


# -- fields and closed points ------------------------------------------------------


@lru_cache(maxsize=None)
def field_spec(q: int) -> FieldSpec:
    return FieldSpec(q)


@lru_cache(maxsize=None)
def orbit_min_table(q: int, e: int) -> np.ndarray:
    """m[x] = least element of the Frobenius orbit of x in F_{q^e}."""
    F = field_spec(q).ext(e)
    xs = np.arange(F.order)
    best = xs.copy()
    cur = xs
    for _ in range(e - 1):
        cur = F.pow_arr(cur, q)
        best = np.minimum(best, cur)
    return best


@lru_cache(maxsize=None)
def closed_point_reps(q: int, e: int) -> Tuple[int, ...]:
    """Orbit minima of the elements of F_{q^e} of exact degree e over F_q."""
    F = field_spec(q).ext(e)
    xs = np.arange(F.order)
    exact = np.ones(F.order, dtype=bool)
    for d in divisors(e):
        if d < e:
            exact &= F.pow_arr(xs, q**d) != xs
    mins = orbit_min_table(q, e)
    return tuple(int(x) for x in np.flatnonzero(exact & (mins == xs)))


# -- linear evaluation of monic polynomials ------------------------------------------


class _LinearEvaluator:
    """Values of monic degree-D polynomials at finite closed points.

    A monic f is indexed by the base-p digits of its lower coefficients
    (coefficient i, F_p-coordinate t at digit position i*k + t).  Its value
    at beta is an affine F_p-linear function of those digits.
    """

    def __init__(self, q: int, D: int, points: Sequence[PointKey], derivative: bool = False):
        spec = field_spec(q)
        p, k = spec.p, spec.k
        self.p, self.k, self.D = p, k, D
        self.points = list(points)
        cols, offs = [], []
        self.widths = []
        for e, beta in self.points:
            F = spec.ext(e)
            emb = spec.embedding(e)
            ke = F.k
            block = np.zeros((k * D, ke))
            if derivative:
                off = F.mul(F.from_int(D), F.pow(beta, D - 1)) if D >= 1 else 0
                for i in range(1, D):
                    bi = F.mul(F.from_int(i), F.pow(beta, i - 1))
                    for t in range(k):
                        block[i * k + t] = F.digits(F.mul(int(emb[p**t]), bi))
            else:
                off = F.pow(beta, D)
                for i in range(D):
                    bi = F.pow(beta, i)
                    for t in range(k):
                        block[i * k + t] = F.digits(F.mul(int(emb[p**t]), bi))
            cols.append(block)
            offs.append(np.array(F.digits(off), dtype=float))
            self.widths.append(ke)
        if cols:
            self.matrix = np.concatenate(cols, axis=1).astype(np.float64)
            self.offset = np.concatenate(offs)
        else:
            self.matrix = np.zeros((k * D, 0))
            self.offset = np.zeros(0)
        total = sum(self.widths)
        enc = np.zeros((total, len(self.points)))
        pos = 0
        for j, w in enumerate(self.widths):
            enc[pos:pos + w, j] = [p**t for t in range(w)]
            pos += w
        self.encoder = enc

    def __call__(self, digits: np.ndarray) -> np.ndarray:
        vals = np.mod(digits @ self.matrix + self.offset, self.p)
        return np.rint(vals @ self.encoder).astype(np.int64)


def _digit_block(p: int, width: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.float64)
    for j in range(width):
        out[:, j] = idx % p
        idx //= p
    return out


def _chunks(total: int, cols: int) -> List[Tuple[int, int]]:
    size = max(1024, _CHUNK_CELLS // max(cols, 1))
    return [(s, min(total, s + size)) for s in range(0, total, size)]


def _map_chunks(fn, ranges, threads: int):
    if threads <= 1:
        return [fn(r) for r in ranges]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, ranges))


def _all_points_upto(q: int, emax: int) -> List[PointKey]:
    return [(e, b) for e in range(1, emax + 1) for b in closed_point_reps(q, e)]


class MonicFamily:
    """All monic polynomials of degree D over F_q with a square-free mask."""

    def __init__(self, q: int, D: int, threads: int = 1):
        spec = field_spec(q)
        self.q, self.D = q, D
        self.p, self.k = spec.p, spec.k
        self.size = q**D
        self.width = self.k * D
        self.threads = threads
        pts = _all_points_upto(q, D // 2)
        self._f_eval = _LinearEvaluator(q, D, pts)
        self._df_eval = _LinearEvaluator(q, D, pts, derivative=True)
        cols = self._f_eval.matrix.shape[1] * 2 + 1
        self.ranges = _chunks(self.size, cols)
        masks = _map_chunks(self._sqfree_chunk, self.ranges, threads)
        self.squarefree = np.concatenate(masks) if masks else np.zeros(0, dtype=bool)

    def digits(self, start: int, stop: int) -> np.ndarray:
        return _digit_block(self.p, self.width, start, stop)

    def _sqfree_chunk(self, rng) -> np.ndarray:
        dig = self.digits(*rng)
        if not self._f_eval.points:
            return np.ones(len(dig), dtype=bool)
        fv = self._f_eval(dig)
        dv = self._df_eval(dig)
        return ~np.any((fv == 0) & (dv == 0), axis=1)

    def evaluate(self, points: Sequence[PointKey], fn):
        """Apply fn(values, mask) chunkwise to the square-free members; returns list."""
        ev = _LinearEvaluator(self.q, self.D, points)
        cols = ev.matrix.shape[1] + 1
        ranges = _chunks(self.size, cols)

        def work(rng):
            mask = self.squarefree[rng[0]:rng[1]]
            dig = self.digits(*rng)[mask]
            return fn(ev(dig) if points else np.zeros((len(dig), 0), dtype=np.int64))

        return _map_chunks(work, ranges, self.threads)


_FAMILIES: Dict[Tuple[int, int], MonicFamily] = {}


def monic_family(q: int, D: int, threads: int = 1) -> MonicFamily:
    key = (q, D)
    if key not in _FAMILIES:
        _FAMILIES[key] = MonicFamily(q, D, threads)
    return _FAMILIES[key]


# -- direct census ---------------------------------------------------------------------


class HyperellipticCensus:
    """Histogram of trace vectors (a_1, ..., a_M) over P_g, weighted per member."""

    def __init__(self, g: int, q: int, max_m: int, threads: int = 1):
        _check_q(q)
        self.g, self.q, self.max_m = g, q, max_m
        pts = _all_points_upto(q, max_m)
        degs = np.array([e for e, _ in pts])
        chis = {e: field_spec(q).ext(e).chi_table() for e in range(1, max_m + 1)}
        hist: Dict[Tuple[int, ...], int] = {}
        for D in (2 * g + 1, 2 * g + 2):
            fam = monic_family(q, D, threads)
            inf_val = 1 if D == 2 * g + 2 else 0

            def traces(vals, degs=degs, inf_val=inf_val):
                chi = np.zeros_like(vals)
                for e in range(1, max_m + 1):
                    sel = degs == e
                    chi[:, sel] = chis[e][vals[:, sel]]
                s = {e: chi[:, degs == e].sum(axis=1) for e in range(1, max_m + 1)}
                t = {e: (chi[:, degs == e] != 0).sum(axis=1) for e in range(1, max_m + 1)}
                out = np.empty((len(vals), max_m), dtype=np.int64)
                for m in range(1, max_m + 1):
                    acc = np.full(len(vals), inf_val if m % 2 else abs(inf_val), dtype=np.int64)
                    for e in divisors(m):
                        acc = acc + e * (s[e] if (m // e) % 2 else t[e])
                    out[:, m - 1] = -acc
                rows, counts = np.unique(out, axis=0, return_counts=True)
                return rows, counts

            for rows, counts in fam.evaluate(pts, traces):
                for row, c in zip(rows, counts):
                    key = tuple(int(x) for x in row)
                    hist[key] = hist.get(key, 0) + int(c)
        # leading coefficient c: a_m(c f) = chi(c)^m a_m(f); half the c are squares
        signs = np.array([(-1) ** m for m in range(1, max_m + 1)])
        self.histogram: Dict[Tuple[int, ...], Fraction] = {}
        half = Fraction(q - 1, 2)
        for key, c in hist.items():
            for twisted in (key, tuple(int(x) for x in np.array(key) * signs)):
                self.histogram[twisted] = self.histogram.get(twisted, Fraction(0)) + half * c

    def total_models(self) -> Fraction:
        return sum(self.histogram.values(), Fraction(0))

    def count(self, lam) -> Fraction:
        lam = Partition.from_parts(lam)
        if lam.weight > self.max_m:
            raise ValueError(f"census built for |lam| <= {self.max_m}")
        if not self.histogram:
            return Fraction(0)
        keys = list(self.histogram)
        a = np.array(keys, dtype=np.int64).reshape(len(keys), self.max_m)
        N = {d: self.q**d + 1 - a[:, d - 1] for d in range(1, self.max_m + 1)}
        if not lam:
            T = np.ones(len(keys), dtype=np.int64)
        else:
            T = T_lambda_arr(lam, N)
        total = sum((int(t) * self.histogram[k] for t, k in zip(T, keys)), Fraction(0))
        return total / gl2_order(self.q)


_CENSUS: Dict[Tuple[int, int, int], HyperellipticCensus] = {}


def hyperelliptic_census(g: int, q: int, max_m: int, threads: int = 1) -> HyperellipticCensus:
    key = (g, q, max_m)
    if key not in _CENSUS:
        _CENSUS[key] = HyperellipticCensus(g, q, max_m, threads)
    return _CENSUS[key]


# -- signatures and the u-recursion ----------------------------------------------------


def signature_from_points(points: Sequence[PointKey], kappa: Sequence[int]) -> Signature:
    """Group a tuple of closed points; the parity of point P is sum kappa_i/deg P mod 2."""
    k: Dict[PointKey, int] = {}
    for pt, m in zip(points, kappa):
        k[pt] = k.get(pt, 0) + m // pt[0]
    return tuple(sorted((pt, v % 2) for pt, v in k.items()))


def _E_finite(sig: Signature) -> int:
    return sum(e for (e, b), _ in sig if b != INF_REP)


def _E_odd(sig: Signature) -> int:
    return sum(e for (e, b), par in sig if par)


def _has_inf(sig: Signature) -> bool:
    return any(b == INF_REP for (_, b), _ in sig)


def u_direct(g: int, q: int, sig: Signature, threads: int = 1) -> int:
    """sum_{f in P_g} prod chi_e(f(beta))^{k}, by enumeration of P_g."""
    _check_q(q)
    if g < 0:
        raise ValueError("g must be nonnegative")
    if _E_odd(sig) % 2:
        return 0
    finite = [(pt, par) for pt, par in sig if pt[1] != INF_REP]
    pts = [pt for pt, _ in finite]
    odd = np.array([par for _, par in finite], dtype=bool)
    degs = [e for e, _ in pts]
    chis = {e: field_spec(q).ext(e).chi_table() for e in set(degs)}
    total = 0
    for D in (2 * g + 1, 2 * g + 2):
        if _has_inf(sig) and D == 2 * g + 1:
            continue
        fam = monic_family(q, D, threads)

        def prod(vals):
            if not pts:
                return len(vals)
            factors = np.empty_like(vals)
            for j, e in enumerate(degs):
                c = chis[e][vals[:, j]]
                factors[:, j] = c if odd[j] else (c != 0)
            return int(factors.prod(axis=1).sum())

        total += sum(fam.evaluate(pts, prod))
    return (q - 1) * total


def _minpoly_degree_subsets(sig: Signature):
    degs = [e for (e, b), _ in sig if b != INF_REP]
    for r in range(len(degs) + 1):
        for S in combinations(range(len(degs)), r):
            yield r, sum(degs[i] for i in S)


def b_coefficient(j: int, q: int, sig: Signature) -> int:
    """Number of monic l of degree j with l(beta) != 0 at every finite point of sig."""
    if j < 0:
        return 0
    return sum((-1) ** r * q ** (j - d) for r, d in _minpoly_degree_subsets(sig) if d <= j)


def U_closed_form(g: int, q: int, sig: Signature) -> int:
    """Character sum over every f of degree 2g+1 or 2g+2 (not nec. square-free).

    Valid when 2g+1 >= total degree of the finite points: the values at the
    finite points are then equidistributed for each leading coefficient.
    """
    E = _E_finite(sig)
    if 2 * g + 1 < E:
        raise ValueError("closed form needs 2g+1 >= total degree of the finite points")
    finite = [(e, par) for (e, b), par in sig if b != INF_REP]
    if any(par for _, par in finite):
        return 0
    prod = 1
    for e, _ in finite:
        prod *= q**e - 1
    inf = [par for (e, b), par in sig if b == INF_REP]
    if inf:
        if inf[0]:
            return 0
        Ds = (2 * g + 2,)
    else:
        Ds = (2 * g + 1, 2 * g + 2)
    return sum((q - 1) * q ** (D - E) * prod for D in Ds)


def u_recursive(g: int, q: int, sig: Signature, threads: int = 1, _memo=None) -> int:
    """u_g from U_g = sum_{j<=g} b_j u_{g-j} + (q-1) b_{g+1} [E_odd even]."""
    _check_q(q)
    memo = {} if _memo is None else _memo
    key = (g, sig)
    if key in memo:
        return memo[key]
    if 2 * g + 1 < _E_finite(sig):
        val = u_direct(g, q, sig, threads)
    else:
        val = U_closed_form(g, q, sig)
        for j in range(1, g + 1):
            b = b_coefficient(j, q, sig)
            if b:
                val -= b * u_recursive(g - j, q, sig, threads, memo)
        if _E_odd(sig) % 2 == 0:
            val -= (q - 1) * b_coefficient(g + 1, q, sig)
    memo[key] = val
    return val


# -- PGL_2 canonical forms --------------------------------------------------------------


@lru_cache(maxsize=None)
def pgl2_elements(q: int) -> Tuple[Tuple[int, int, int, int], ...]:
    F = field_spec(q).base
    out = set()
    for a, b, c, d in product(range(q), repeat=4):
        if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
            continue
        lead = a if a else b
        inv = F.inv(lead)
        out.add(tuple(F.mul(x, inv) for x in (a, b, c, d)))
    return tuple(sorted(out))


def _moebius(q: int, m, pt: PointKey) -> PointKey:
    e, beta = pt
    spec = field_spec(q)
    F = spec.ext(e)
    emb = spec.embedding(e)
    a, b, c, d = (int(emb[x]) for x in m)
    if beta == INF_REP:
        return (1, INF_REP) if c == 0 else (1, F.div(a, c))
    den = F.add(F.mul(c, beta), d)
    if den == 0:
        return (1, INF_REP)
    img = F.div(F.add(F.mul(a, beta), b), den)
    return (e, int(orbit_min_table(q, e)[img]))


def canonical_signature(q: int, sig: Signature) -> Signature:
    """Least image of sig under PGL_2(F_q); u_g is invariant under this action."""
    best = sig
    for m in pgl2_elements(q):
        img = tuple(sorted((_moebius(q, m, pt), par) for pt, par in sig))
        if img < best:
            best = img
    return best


def point_tuples(q: int, kappa: Sequence[int]):
    """Yield (closed points P_i with deg P_i | kappa_i, multiplicity prod deg P_i)."""
    choices = []
    for m in kappa:
        opts = [((1, INF_REP), 1)]
        for e in divisors(m):
            opts.extend(((e, b), e) for b in closed_point_reps(q, e))
        choices.append(opts)
    for combo in product(*choices):
        w = 1
        for _, e in combo:
            w *= e
        yield tuple(pt for pt, _ in combo), w


def orbit_representatives(q: int, max_weight: int) -> List[Signature]:
    """Canonical signatures arising from trace moments of total weight <= max_weight."""
    reps = set()
    for n in range(0, max_weight + 1):
        for kappa in partitions(n):
            seen = set()
            for pts, _ in point_tuples(q, kappa):
                sig = signature_from_points(pts, kappa)
                if sig not in seen:
                    seen.add(sig)
                    reps.add(canonical_signature(q, sig))
    return sorted(reps)


class MomentEngine:
    """Trace moments M_kappa = sum_{f in P_g} prod a_{kappa_i}(f) via the u-recursion."""

    def __init__(self, g: int, q: int, threads: int = 1):
        _check_q(q)
        self.g, self.q, self.threads = g, q, threads
        self._u: Dict[Signature, int] = {}
        self._memo: Dict = {}
        self._canon: Dict[Signature, Signature] = {}
        self._moments: Dict[Tuple[int, ...], int] = {}

    def u(self, sig: Signature) -> int:
        canon = self._canon.get(sig)
        if canon is None:
            canon = self._canon[sig] = canonical_signature(self.q, sig)
        if canon not in self._u:
            self._u[canon] = u_recursive(self.g, self.q, canon, self.threads, self._memo)
        return self._u[canon]

    def moment(self, kappa: Tuple[int, ...]) -> int:
        if kappa not in self._moments:
            total = 0
            for pts, w in point_tuples(self.q, kappa):
                total += w * self.u(signature_from_points(pts, kappa))
            self._moments[kappa] = (-1) ** len(kappa) * total
        return self._moments[kappa]

    def count(self, lam) -> Fraction:
        expansion = trace_moment_expansion(tuple(Partition.from_parts(lam)), self.q)
        total = sum((c * self.moment(k) for k, c in expansion.items()), Fraction(0))
        return total / gl2_order(self.q)


_ENGINES: Dict[Tuple[int, int], MomentEngine] = {}


def moment_engine(g: int, q: int, threads: int = 1) -> MomentEngine:
    if (g, q) not in _ENGINES:
        _ENGINES[(g, q)] = MomentEngine(g, q, threads)
    return _ENGINES[(g, q)]


# -- public entry point ------------------------------------------------------------------

DIRECT_LIMIT = 10**6


def hyperelliptic_count(g: int, q: int, lam, method: str = "auto", threads: int = 1) -> CountRecord:
    """|H_{g,n}^(sigma F_q)| for sigma of cycle type lam."""
    if g not in (2, 3):
        raise ValueError("hyperelliptic counts are provided for g in {2, 3}")
    _check_q(q)
    lam = Partition.from_parts(lam)
    if lam.weight > 8 - 2 * g:
        raise ValueError(f"|lam| must be <= {8 - 2 * g} for g = {g}")
    if method == "auto":
        method = "direct" if q ** (2 * g + 2) <= DIRECT_LIMIT else "recursive"
    if method == "direct":
        value = hyperelliptic_census(g, q, 8 - 2 * g, threads).count(lam)
    elif method == "recursive":
        value = moment_engine(g, q, threads).count(lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountRecord(SpaceId("H", g, lam.weight), q, lam, value)
