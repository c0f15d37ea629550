"""Partitions, symmetric-group characters and symmetric functions over Q[L].

Symmetric functions are stored in the power-sum basis: a ``SymPolynomial``
maps a partition ``mu`` (standing for ``p_mu = p_{mu_1} p_{mu_2} ...``) to an
``LPoly`` coefficient.  Everything is exact; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Number = Union[int, Fraction]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Hashes and compares like the underlying tuple, so plain tuples can be
    used interchangeably as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < x:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Dict[int, int]:
        """Map part size m to its multiplicity r_m."""
        out: Dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out

    def scaled(self, k: int) -> "Partition":
        return tuple.__new__(Partition, tuple(k * x for x in self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def format_partition(mu: Iterable[int]) -> str:
    """Comma-joined parts; the empty partition prints as ``()``."""
    mu = tuple(mu)
    return ",".join(str(x) for x in mu) if mu else "()"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("()", "", "-", "0"):
        return Partition(())
    text = text.strip("()")
    return Partition.from_parts(int(x) for x in text.replace(" ", "").split(",") if x)


@lru_cache(maxsize=None)
def partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n, sorted lexicographically on their part lists."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(Partition(p) for p in gen(n, n)))


@lru_cache(maxsize=None)
def zee(mu: Tuple[int, ...]) -> int:
    """Centralizer order z_mu = prod_m m^{r_m} r_m!."""
    out = 1
    for m, r in Partition(mu).multiplicities().items():
        out *= m**r * factorial(r)
    return out


def class_size(mu: Tuple[int, ...]) -> int:
    return factorial(sum(mu)) // zee(mu)


def _beta_set(lam: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(lam)
    return tuple(lam[i] + (n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    # Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves
    # one bead from b to b - r; the sign counts beads jumped over.
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in beads:
            continue
        jumped = sum(1 for x in beta if c < x < b)
        new = tuple(sorted((beads - {b}) | {c}, reverse=True))
        val = _mn(new, rest)
        total += -val if jumped % 2 else val
    return total


def character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """Irreducible character chi_lam of S_n at the class of cycle type mu."""
    lam, mu = Partition(lam), Partition.from_parts(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"weight mismatch: |{tuple(lam)}| != |{tuple(mu)}|")
    return _mn(_beta_set(lam), tuple(mu))


def hook_length_dimension(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape lam."""
    lam = Partition(lam)
    conj = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.weight) // prod


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


def divisors(n: int) -> Tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# Polynomials in L


class LPoly:
    """Polynomial in the Tate class L with rational coefficients.

    Coefficients are held densely in ascending order with trailing zeros
    stripped.  Also used for polynomials in q before the substitution q -> L.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Iterable[Number], Mapping[int, Number]] = ()):
        if isinstance(coeffs, Mapping):
            top = max((e for e, v in coeffs.items() if v), default=-1)
            dense = [Fraction(0)] * (top + 1)
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent of L")
                if v:
                    dense[e] = Fraction(v)
        else:
            dense = [Fraction(v) for v in coeffs]
        while dense and not dense[-1]:
            dense.pop()
        self._c: Tuple[Fraction, ...] = tuple(dense)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: Tuple[Fraction, ...]) -> "LPoly":
        obj = object.__new__(cls)
        obj._c = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Number) -> "LPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "LPoly":
        return cls({e: c})

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._c

    def coeff(self, e: int) -> Fraction:
        return self._c[e] if 0 <= e < len(self._c) else Fraction(0)

    def terms(self) -> Dict[int, Fraction]:
        return {e: c for e, c in enumerate(self._c) if c}

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._c)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._c)

    def int_coeffs(self) -> Tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integral polynomial {self}")
        return tuple(int(c) for c in self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, LPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == LPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def _coerce(self, other) -> "LPoly":
        if isinstance(other, LPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LPoly.const(other)
        raise TypeError(f"cannot combine LPoly with {type(other).__name__}")

    def __add__(self, other) -> "LPoly":
        other = self._coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return LPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "LPoly":
        return LPoly._raw(tuple(-c for c in self._c))

    def __sub__(self, other) -> "LPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LPoly._raw(())
            return LPoly._raw(tuple(c * other for c in self._c))
        other = self._coerce(other)
        a, b = self._c, other._c
        if not a or not b:
            return LPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LPoly":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        raise TypeError("division by a polynomial: use divmod")

    def __pow__(self, k: int) -> "LPoly":
        out = LPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "LPoly"):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other._c[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, y in enumerate(other._c):
                    rem[i - dq + j] -= c * y
        return LPoly(quot), LPoly(rem)

    def __call__(self, x):
        out = 0
        for c in reversed(self._c):
            out = out * x + c
        return out

    def substitute_power(self, k: int) -> "LPoly":
        """c(L) -> c(L^k), the plethysm p_k applied to a Q[L] coefficient."""
        if k == 1 or len(self._c) <= 1:
            return self
        out = [Fraction(0)] * ((len(self._c) - 1) * k + 1)
        for e, c in enumerate(self._c):
            out[e * k] = c
        return LPoly._raw(tuple(out))

    def is_palindromic(self, degree: int) -> bool:
        return all(self.coeff(i) == self.coeff(degree - i) for i in range(degree + 1))

    def format(self, var: str = "L") -> str:
        if not self._c:
            return "0"
        pieces = []
        for e in range(len(self._c) - 1, -1, -1):
            c = self._c[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LPoly({self.format()})"


L = LPoly.monomial(1)
ONE = LPoly.const(1)
ZERO = LPoly()


def as_lpoly(x) -> LPoly:
    if isinstance(x, LPoly):
        return x
    return LPoly.const(x)


# ---------------------------------------------------------------------------
# Symmetric functions


class SymPolynomial:
    """Finite sum of power-sum monomials with Q[L] coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Tuple[int, ...], object] = ()):
        clean: Dict[Partition, LPoly] = {}
        for mu, c in dict(terms).items():
            c = as_lpoly(c)
            if c:
                mu = mu if isinstance(mu, Partition) else Partition.from_parts(mu)
                clean[mu] = clean[mu] + c if mu in clean else c
        self.terms = {mu: c for mu, c in clean.items() if c}

    @classmethod
    def p(cls, *parts: int) -> "SymPolynomial":
        return cls({Partition.from_parts(parts): ONE})

    @classmethod
    def one(cls) -> "SymPolynomial":
        return cls({Partition(()): ONE})

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPolynomial) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return SymPolynomial(out)

    def __neg__(self) -> "SymPolynomial":
        return SymPolynomial({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SymPolynomial":
        if not isinstance(other, SymPolynomial):
            c = as_lpoly(other)
            return SymPolynomial({mu: v * c for mu, v in self.terms.items()})
        out: Dict[Tuple[int, ...], LPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(sorted(m1 + m2, reverse=True))
                v = c1 * c2
                out[key] = out[key] + v if key in out else v
        return SymPolynomial(out)

    __rmul__ = __mul__

    def degrees(self) -> set:
        return {mu.weight for mu in self.terms}

    def is_homogeneous(self, n: int) -> bool:
        return all(mu.weight == n for mu in self.terms)

    def has_L(self) -> bool:
        return any(c.degree > 0 for c in self.terms.values())

    def __repr__(self) -> str:
        if not self.terms:
            return "SymPolynomial(0)"
        body = " + ".join(
            f"({c.format()})*p{format_partition(mu)}" for mu, c in sorted(self.terms.items())
        )
        return f"SymPolynomial({body})"


@lru_cache(maxsize=None)
def schur_in_p(lam: Tuple[int, ...]) -> SymPolynomial:
    """s_lam = sum_mu z_mu^{-1} chi_lam(mu) p_mu."""
    lam = Partition(lam)
    n = lam.weight
    return SymPolynomial(
        {mu: Fraction(character(lam, mu), zee(mu)) for mu in partitions(n)}
    )


@lru_cache(maxsize=None)
def h_in_p(n: int) -> SymPolynomial:
    """Complete symmetric function h_n = sum_mu z_mu^{-1} p_mu."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return SymPolynomial({mu: Fraction(1, zee(mu)) for mu in partitions(n)})


def p_to_schur(f: SymPolynomial, n: int) -> Dict[Partition, LPoly]:
    """Schur coefficients of a homogeneous degree-n symmetric function.

    Uses the Hall inner product: <p_mu, s_lam> = chi_lam(mu).
    """
    if not f.is_homogeneous(n):
        raise ValueError(f"input is not homogeneous of degree {n}: degrees {sorted(f.degrees())}")
    out: Dict[Partition, LPoly] = {}
    for lam in partitions(n):
        c = ZERO
        for mu, v in f.terms.items():
            chi = character(lam, mu)
            if chi:
                c = c + v * chi
        if c:
            out[lam] = c
    return out


def schur_to_p(coeffs: Mapping[Tuple[int, ...], object]) -> SymPolynomial:
    """Inverse of p_to_schur: sum_lam c_lam s_lam in the power-sum basis."""
    out = SymPolynomial()
    for lam, c in coeffs.items():
        c = as_lpoly(c)
        if c:
            out = out + schur_in_p(tuple(lam)) * c
    return out
