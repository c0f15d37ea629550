"""Small finite fields F_{p^k} with Zech-logarithm tables.

Elements are plain integers: the base-p digits of an element are its
coordinates in the polynomial basis 1, t, t^2, ... of F_p[t]/(m(t)).  Scalar
methods take and return ints; the ``*_arr`` methods work elementwise on
numpy integer arrays and are what the census loops use.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

TABLE_LIMIT = 2**16
INSTANCE_LIMIT = 2**20


class UnsupportedOperation(Exception):
    """Raised for operations outside the supported characteristic/size."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, k) with q = p^k, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, m = 0, q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1 or not is_prime(p):
        raise ValueError(f"{q} is not a prime power")
    return p, k


# -- polynomials over F_p as coefficient lists (ascending) -------------------


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: List[int], m: Sequence[int], p: int) -> List[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _pgcd(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: List[int], e: int, m: Sequence[int], p: int) -> List[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_fp(m: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    k = len(m) - 1
    if k < 1:
        return False
    x = [0, 1]
    if _psub(_ppowmod(x, p**k, m, p), x, p):
        return False
    for r in _prime_factors(k):
        h = _psub(_ppowmod(x, p ** (k // r), m, p), x, p)
        if len(_pgcd(list(m), h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Least monic irreducible of degree k over F_p, lower coefficients read as a base-p integer."""
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        if low[0] == 0:
            continue
        m = low + [1]
        if is_irreducible_fp(m, p):
            return tuple(m)
    raise RuntimeError("no irreducible polynomial found")


def _digits(x: int, p: int, k: int) -> List[int]:
    return [(x // p**i) % p for i in range(k)]


def _encode(d: Sequence[int], p: int) -> int:
    return sum(int(c) * p**i for i, c in enumerate(d))


# -- the field -----------------------------------------------------------------


class GF:
    """The finite field F_{p^k}."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p, self.k = p, k
        self.order = p**k
        if self.order > INSTANCE_LIMIT:
            raise UnsupportedOperation(f"field of order {self.order} exceeds 2^20")
        self.modulus = least_irreducible(p, k)
        self.tabled = self.order <= TABLE_LIMIT
        self._pw = [p**i for i in range(k)]
        if self.tabled:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})"

    @property
    def characteristic(self) -> int:
        return self.p

    def elements(self) -> range:
        return range(self.order)

    def digits(self, x: int) -> List[int]:
        return _digits(x, self.p, self.k)

    def encode(self, d: Sequence[int]) -> int:
        return _encode(d, self.p)

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self.digits(a), self.digits(b), self.p), self.modulus, self.p)
        return self.encode(prod)

    def _build_tables(self) -> None:
        Q, p = self.order, self.p
        if Q == 2:
            gen = 1
        else:
            gen = None
            for cand in range(2, Q):
                # cand is primitive iff cand^((Q-1)/r) != 1 for each prime r | Q-1
                if all(self._pow_poly(cand, (Q - 1) // r) != 1 for r in _prime_factors(Q - 1)):
                    gen = cand
                    break
        self.generator = gen
        exp = np.zeros(Q - 1, dtype=np.int64)
        log = np.full(Q, -1, dtype=np.int64)
        x = 1
        for i in range(Q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_poly(x, gen)
        assert x == 1 and (log[1:] >= 0).all(), "generator is not primitive"
        self.exp_table, self.log_table = exp, log
        # zech[d] = log(1 + g^d), -1 when 1 + g^d = 0
        plus_one = np.where(exp % p == p - 1, exp - (p - 1), exp + 1)
        zech = log[plus_one]
        self.zech = zech
        self._neg_one_log = 0 if p == 2 else (Q - 1) // 2

    def _pow_poly(self, a: int, e: int) -> int:
        return self.encode(_ppowmod(self.digits(a), e, self.modulus, self.p))

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        return self.encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.encode([(-x) % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if not self.tabled:
            return self._mul_poly(a, b)
        Q1 = self.order - 1
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % Q1])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if not self.tabled:
            return self._pow_poly(a, self.order - 2)
        Q1 = self.order - 1
        return int(self.exp_table[(-self.log_table[a]) % Q1])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if not self.tabled:
            return self._pow_poly(a, e % (self.order - 1))
        Q1 = self.order - 1
        return int(self.exp_table[(self.log_table[a] * e) % Q1])

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.p

    def is_square(self, a: int) -> bool:
        return a == 0 or self.quadratic_character(a) == 1

    def quadratic_character(self, a: int) -> int:
        """0 at 0, 1 on nonzero squares, -1 otherwise (odd characteristic)."""
        if self.p == 2:
            raise UnsupportedOperation("quadratic character needs odd characteristic")
        if a == 0:
            return 0
        if self.tabled:
            return 1 if self.log_table[a] % 2 == 0 else -1
        return 1 if self._pow_poly(a, (self.order - 1) // 2) == 1 else -1

    def quadratic_character_euler(self, a: int) -> int:
        """Same character computed as a^((Q-1)/2)."""
        if self.p == 2:
            raise UnsupportedOperation("quadratic character needs odd characteristic")
        if a == 0:
            return 0
        r = self._pow_poly(a, (self.order - 1) // 2)
        return 1 if r == 1 else -1

    def frobenius(self, a: int, power: int = 1) -> int:
        """a -> a^(p^power)."""
        return self.pow(a, self.p**power)

    # -- vectorized arithmetic (tabled fields only) --------------------------

    def _need_tables(self) -> None:
        if not self.tabled:
            raise UnsupportedOperation("vectorized arithmetic needs a tabled field")

    def mul_arr(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        Q1 = self.order - 1
        r = self.exp_table[(self.log_table[a] + self.log_table[b]) % Q1]
        return np.where((a == 0) | (b == 0), 0, r)

    def add_arr(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        Q1 = self.order - 1
        la, lb = self.log_table[a], self.log_table[b]
        z = self.zech[(lb - la) % Q1]
        r = np.where(z < 0, 0, self.exp_table[(la + np.maximum(z, 0)) % Q1])
        r = np.where(a == 0, b, r)
        return np.where(b == 0, a, r)

    def neg_arr(self, a):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        Q1 = self.order - 1
        r = self.exp_table[(self.log_table[a] + self._neg_one_log) % Q1]
        return np.where(a == 0, 0, r)

    def sub_arr(self, a, b):
        return self.add_arr(a, self.neg_arr(b))

    def pow_arr(self, a, e: int):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        Q1 = self.order - 1
        r = self.exp_table[(self.log_table[a] * e) % Q1]
        return np.where(a == 0, 0, r)

    def chi_arr(self, a):
        """Vectorized quadratic character."""
        self._need_tables()
        if self.p == 2:
            raise UnsupportedOperation("quadratic character needs odd characteristic")
        a = np.asarray(a, dtype=np.int64)
        la = self.log_table[a]
        return np.where(a == 0, 0, np.where(la % 2 == 0, 1, -1)).astype(np.int64)

    def chi_table(self) -> np.ndarray:
        return self.chi_arr(np.arange(self.order))

    def digit_matrix(self, xs) -> np.ndarray:
        """F_p coordinates of each element, shape (len(xs), k)."""
        xs = np.asarray(xs, dtype=np.int64)
        return np.stack([(xs // w) % self.p for w in self._pw], axis=-1)

    def subfield_elements(self, d: int) -> np.ndarray:
        """Elements of the unique subfield of order p^d (d | k)."""
        if self.k % d:
            raise ValueError("subfield degree must divide k")
        if d == self.k:
            return np.arange(self.order)
        self._need_tables()
        step = (self.order - 1) // (self.p**d - 1)
        return np.concatenate([[0], self.exp_table[::step]])


# -- F_q and its extensions ------------------------------------------------------


class FieldSpec:
    """F_q together with extensions F_{q^d} and the embeddings F_q -> F_{q^d}.

    Each F_{q^d} is realised as GF(p, k*d) with its own least irreducible
    modulus; the embedding sends the class of t in F_q to the least root of
    F_q's modulus inside F_{q^d}.  Not thread-safe while extensions are being
    built; read-only afterwards.
    """

    def __init__(self, q: int, max_degree: int = 1):
        self.p, self.k = prime_power(q)
        self.q = q
        self.base = GF(self.p, self.k)
        self._ext: Dict[int, GF] = {1: self.base}
        self._emb: Dict[int, np.ndarray] = {1: np.arange(q)}
        self._tower: Dict[Tuple[int, int], np.ndarray] = {}
        for d in range(2, max_degree + 1):
            self.ext(d)

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q})"

    def ext(self, d: int) -> GF:
        """The field F_{q^d}."""
        if d not in self._ext:
            self._ext[d] = GF(self.p, self.k * d)
        return self._ext[d]

    def embedding(self, d: int) -> np.ndarray:
        """Array e with e[x] = image of x in F_{q^d} for x in F_q."""
        if d not in self._emb:
            big = self.ext(d)
            self._emb[d] = _embed_via_root(self.base, big, None)
        return self._emb[d]

    def tower_embedding(self, a: int, b: int) -> np.ndarray:
        """Embedding F_{q^a} -> F_{q^{ab}} compatible with the embeddings of F_q."""
        if (a, b) not in self._tower:
            small, big = self.ext(a), self.ext(a * b)
            constraint = (self.embedding(a), self.embedding(a * b))
            self._tower[(a, b)] = _embed_via_root(small, big, constraint)
        return self._tower[(a, b)]

    def p1_points(self, d: int) -> List[object]:
        """Points of P^1(F_{q^d}): field elements followed by INF."""
        return list(range(self.ext(d).order)) + [INF]


def _embed_via_root(small: GF, big: GF, constraint) -> np.ndarray:
    if big.k % small.k:
        raise ValueError("no embedding between these fields")
    m = small.modulus
    for r in range(big.order):
        val = 0
        for c in reversed(m):
            val = big.add(big.mul(val, r), c)
        if val != 0:
            continue
        table = _linear_image(small, big, r)
        if constraint is not None:
            emb_small, emb_big = constraint
            if not np.array_equal(table[emb_small], emb_big):
                continue
        return table
    raise RuntimeError("no compatible embedding found")


def _linear_image(small: GF, big: GF, root: int) -> np.ndarray:
    powers = [1]
    for _ in range(small.k - 1):
        powers.append(big.mul(powers[-1], root))
    table = np.zeros(small.order, dtype=np.int64)
    for x in range(small.order):
        acc = 0
        for c, w in zip(small.digits(x), powers):
            if c:
                acc = big.add(acc, big.mul(c % big.p, w))
        table[x] = acc
    return table


# -- P^1 points ---------------------------------------------------------------


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return "INF"


INF = _Infinity()


# -- univariate polynomials -----------------------------------------------------


class UniPoly:
    """Polynomial over a GF, coefficients ascending, leading coefficient nonzero."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"UniPoly({self.field!r}, {list(self.coeffs)})"

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def derivative(self) -> "UniPoly":
        F = self.field
        return UniPoly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return UniPoly(F, [F.mul(c, inv) for c in self.coeffs])

    def divmod(self, other: "UniPoly"):
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        inv = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = F.mul(rem[i], inv)
            if c:
                quot[i - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] = F.sub(rem[i - dq + j], F.mul(c, y))
        return UniPoly(F, quot), UniPoly(F, rem)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a


def is_squarefree(f: UniPoly) -> bool:
    """True iff gcd(f, f') = 1."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no squarefree decomposition")
    if f.degree <= 0:
        return True
    return f.gcd(f.derivative()).degree == 0


def eval_at_p1_point(f: UniPoly, alpha, g: int, field: Optional[GF] = None,
                     embedding: Optional[np.ndarray] = None) -> int:
    """Value of f, homogenised to degree 2g+2, at a point of P^1.

    ``alpha`` is an element of ``field`` (an extension of f's field, with
    ``embedding`` mapping f's coefficients into it) or INF.  At INF the
    value is the coefficient of x^(2g+2).
    """
    if f.degree > 2 * g + 2:
        raise ValueError("polynomial degree exceeds 2g+2")
    if alpha is INF:
        c = f.coeffs[2 * g + 2] if f.degree == 2 * g + 2 else 0
        return int(embedding[c]) if embedding is not None else c
    if field is None:
        return f(alpha)
    acc = 0
    for c in reversed(f.coeffs):
        c = int(embedding[c]) if embedding is not None else c
        acc = field.add(field.mul(acc, alpha), c)
    return acc
