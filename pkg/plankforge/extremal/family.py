from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from plankforge.bounds.registry import bound_log_value
from plankforge.bounds.types import BoundKind, BoundSpec
from plankforge.polynomials.arithmetic import multiply_all
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.norms import log_monomial_norm
from plankforge.spaces.optimizer import estimate_sup_norm
from plankforge.spaces.types import NormOptions, SpaceSpec
from plankforge.tolerances import Tolerances

logger = logging.getLogger(__name__)

EQUALITY_RTOL = 1e-12
ESTIMATE_RTOL = 1e-6


@dataclass(frozen=True, slots=True)
class ExtremalFamily:
    """Monomials on l_1^d whose norm ratio per unit degree is exactly d."""

    d: int
    n: int
    k: int
    field: Field
    polynomials: tuple[Polynomial, ...]

    @property
    def space(self) -> SpaceSpec:
        return SpaceSpec(self.field, self.d, 1.0)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(polynomial.degree for polynomial in self.polynomials)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def expected_ratio(self) -> float:
        return float(self.d)

    @property
    def product_exponent(self) -> tuple[int, ...]:
        exponent = [0] * self.d
        for polynomial in self.polynomials:
            for position, power in enumerate(polynomial.terms[0][0]):
                exponent[position] += power
        return tuple(exponent)


@dataclass(frozen=True, slots=True)
class EqualityReport:
    d: int
    n: int
    k: int
    log_norms: tuple[float, ...]
    log_product_norm: float
    log_expected_product_norm: float
    ratio: float
    passed: bool
    estimated_product_norm: float | None = None
    estimate_passed: bool | None = None


@dataclass(frozen=True, slots=True)
class SharpnessReport:
    kind: BoundKind
    n: int
    log_constant: float
    log_norms: tuple[float, ...]
    log_product_norm: float
    residual: float
    passed: bool


def build_family(d: int, n: int, k: int = 1, field: Field = Field.REAL) -> ExtremalFamily:
    if d < 1 or k < 1:
        raise ValueError('d and k must be >= 1')
    if n <= d:
        raise ValueError(f'n must be > d, got n={n}, d={d}')

    high = k * (n - d + 1)
    polynomials = []
    for i in range(n):
        if i < d - 1:
            alpha = tuple(high if j == i else 0 for j in range(d))
        else:
            alpha = tuple(k if j == d - 1 else 0 for j in range(d))
        polynomials.append(Polynomial.monomial(alpha, field))
    return ExtremalFamily(d=d, n=n, k=k, field=field, polynomials=tuple(polynomials))


def _close(first: float, second: float, rtol: float) -> bool:
    return abs(first - second) <= rtol * max(1.0, abs(first), abs(second))


def verify_equality(
    family: ExtremalFamily,
    cross_check: bool = True,
    options: NormOptions | None = None,
) -> EqualityReport:
    """||prod P_i|| = d^{-sum deg P_i} prod ||P_i||, checked exactly in the log domain."""
    space = family.space
    log_norms = tuple(log_monomial_norm(polynomial.terms[0][0], space) for polynomial in family.polynomials)
    log_product_norm = log_monomial_norm(family.product_exponent, space)
    log_expected = math.fsum(log_norms) - family.total_degree * math.log(family.d)
    passed = _close(log_product_norm, log_expected, EQUALITY_RTOL)
    ratio = math.exp((math.fsum(log_norms) - log_product_norm) / family.total_degree)

    estimated = None
    estimate_passed = None
    if cross_check:
        estimate = estimate_sup_norm(multiply_all(family.polynomials), space, options)
        estimated = estimate.value
        estimate_passed = _close(estimate.log_value, log_product_norm, ESTIMATE_RTOL)
        if not estimate_passed:
            logger.warning('estimated product norm %.17g disagrees with exact %.17g', estimated,
                           math.exp(log_product_norm))

    return EqualityReport(
        d=family.d,
        n=family.n,
        k=family.k,
        log_norms=log_norms,
        log_product_norm=log_product_norm,
        log_expected_product_norm=log_expected,
        ratio=ratio,
        passed=passed,
        estimated_product_norm=estimated,
        estimate_passed=estimate_passed,
    )


def _coordinate_sharpness(kind: BoundKind, n: int, p: float) -> SharpnessReport:
    if n < 1:
        raise ValueError('n must be >= 1')
    space = SpaceSpec(Field.COMPLEX, n, p)
    log_constant = bound_log_value(BoundSpec(kind, (1,) * n, Field.COMPLEX, d=n, p=p))
    log_norms = tuple(log_monomial_norm(tuple(int(i == j) for j in range(n)), space) for i in range(n))
    log_product_norm = log_monomial_norm((1,) * n, space)
    residual = log_constant + log_product_norm - math.fsum(log_norms)
    return SharpnessReport(
        kind=kind,
        n=n,
        log_constant=log_constant,
        log_norms=log_norms,
        log_product_norm=log_product_norm,
        residual=residual,
        passed=abs(residual) <= Tolerances.CERTIFICATE * max(1.0, abs(log_constant)),
    )


def bst_sharpness_check(n: int) -> SharpnessReport:
    """Coordinate functionals on l_1^n attain the constant n^n."""
    return _coordinate_sharpness(BoundKind.BST, n, 1.0)


def hilbert_sharpness_check(n: int) -> SharpnessReport:
    return _coordinate_sharpness(BoundKind.HILBERT_COMPLEX, n, 2.0)
