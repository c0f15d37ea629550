"""From per-cycle-type counts to s_lam coefficients, trace polynomials and L."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Mapping, Sequence, Tuple

from ..symcore import LPoly, Partition, character, class_size, partitions
from .records import SpaceId, TracePolynomial


class PolynomialityError(Exception):
    """Samples are not explained by a polynomial of the expected shape."""


def equivariant_coeff(lam, counts: Mapping[Tuple[int, ...], object]):
    """Coefficient of s_lam: (1/n!) sum_mu |class mu| chi_lam(mu) count(mu).

    Works for rational counts and for LPoly-valued counts alike.
    """
    lam = Partition.from_parts(lam)
    n = lam.weight
    missing = [mu for mu in partitions(n) if mu not in counts]
    if missing:
        raise ValueError(f"counts missing for cycle types {[tuple(m) for m in missing]}")
    total = 0
    for mu in partitions(n):
        chi = character(lam, mu)
        if chi:
            total = total + counts[mu] * (class_size(mu) * chi)
    return total * Fraction(1, factorial(n))


def equivariant_coeffs(counts: Mapping[Tuple[int, ...], object], n: int) -> Dict[Partition, object]:
    return {lam: equivariant_coeff(lam, counts) for lam in partitions(n)}


def lagrange(samples: Sequence[Tuple[int, Fraction]]) -> LPoly:
    """Exact Lagrange interpolation through the given (x, y) samples."""
    xs = [Fraction(x) for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    out = LPoly()
    x = LPoly.monomial(1)
    for i, (xi, (_, yi)) in enumerate(zip(xs, samples)):
        basis = LPoly.const(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * (x - xj)
                denom *= xi - xj
        out = out + basis * (Fraction(yi) / denom)
    return out


def interpolate(space: SpaceId, lam, samples: Sequence[Tuple[int, object]],
                holdout: Tuple[int, object] = None, degree: int = None,
                nonnegative: bool = False) -> TracePolynomial:
    """Fit P_lam(q) through samples and validate it.

    Checks degree <= dim, integral coefficients, agreement at the held-out
    point and, when requested, nonnegative coefficients.  Any failure
    raises PolynomialityError.
    """
    lam = Partition.from_parts(lam)
    dim = space.dimension if degree is None else degree
    samples = [(int(x), Fraction(y)) for x, y in samples]
    if holdout is None:
        if len(samples) < dim + 2:
            raise PolynomialityError(
                f"{space.label()} {tuple(lam)}: need {dim + 2} samples (dim {dim} plus holdout)"
            )
        holdout = samples[-1]
        samples = samples[:-1]
    if len(samples) < dim + 1:
        raise PolynomialityError(f"{space.label()} {tuple(lam)}: need at least {dim + 1} samples")
    poly = lagrange(samples)
    problems = []
    if poly.degree > dim:
        problems.append(f"degree {poly.degree} exceeds dimension {dim}")
    if not poly.is_integral():
        problems.append("non-integral coefficients")
    if nonnegative and not poly.is_nonnegative():
        problems.append("negative coefficients")
    hx, hy = int(holdout[0]), Fraction(holdout[1])
    if poly(Fraction(hx)) != hy:
        problems.append(f"holdout q={hx}: predicted {poly(Fraction(hx))}, observed {hy}")
    if problems:
        raise PolynomialityError(f"{space.label()} lam={tuple(lam)}: " + "; ".join(problems))
    return TracePolynomial(space, lam, poly, validated=True)


def to_hodge(tp: TracePolynomial) -> LPoly:
    """Substitute q -> L in a validated trace polynomial."""
    if not tp.validated:
        raise ValueError("trace polynomial has not been validated")
    return LPoly(tp.poly.coeffs)


def evaluate_schur_table(table: Mapping[Tuple[int, ...], LPoly], q: int) -> Dict[Partition, Fraction]:
    return {Partition.from_parts(lam): poly(Fraction(q)) for lam, poly in table.items()}
