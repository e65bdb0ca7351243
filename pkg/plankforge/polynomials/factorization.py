from __future__ import annotations

import cmath
from dataclasses import replace

import numpy as np

from plankforge.errors import DimensionMismatchError
from plankforge.spaces.norms import dual_norm
from plankforge.spaces.types import SpaceSpec
from .arithmetic import evaluate_many
from .types import Field, LinearFactor, LinearFactorization, Polynomial

TORUS_RADIUS = 0.5
TORUS_STEPS = 8


def torus_grid(radius: float = TORUS_RADIUS, steps: int = TORUS_STEPS) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(steps) / steps
    first, second = np.meshgrid(angles, angles, indexing='ij')
    return radius * np.stack([np.exp(1j * first.ravel()), np.exp(1j * second.ravel())], axis=1)


def evaluate_factorization(factorization: LinearFactorization, points) -> np.ndarray:
    array = np.asarray(points, dtype=complex)
    values = np.full(array.shape[0], factorization.scale, dtype=complex)
    for factor in factorization.factors:
        values *= array @ np.asarray(factor.coefficients, dtype=complex)
    return values


def factor_binary_form(polynomial: Polynomial, space: SpaceSpec | None = None) -> LinearFactorization:
    """Split a homogeneous form on C^2 into linear factors of dual norm one times a positive scale."""
    if polynomial.dim != 2:
        raise DimensionMismatchError('factor_binary_form requires dim == 2')
    if polynomial.is_zero:
        raise ValueError('cannot factor the zero polynomial')
    if not polynomial.is_homogeneous:
        raise ValueError('factor_binary_form requires a homogeneous polynomial')
    if polynomial.degree < 1:
        raise ValueError('factor_binary_form requires degree >= 1')
    space = space or SpaceSpec(Field.COMPLEX, 2, 2.0)
    if space.d != 2:
        raise DimensionMismatchError('factor_binary_form requires a two-dimensional space')

    degree = polynomial.degree
    # dehomogenize in w = z_1 / z_2: the coefficient of w^j is that of z_1^j z_2^{k-j}
    univariate = np.zeros(degree + 1, dtype=complex)
    for (first, _), coefficient in polynomial.terms:
        univariate[first] = coefficient
    leading_power = int(np.nonzero(univariate)[0].max())
    leading = complex(univariate[leading_power])

    roots = np.roots(univariate[: leading_power + 1][::-1]) if leading_power > 0 else np.array([], dtype=complex)
    raw_factors = [(1.0 + 0j, complex(-root)) for root in roots]
    raw_factors.extend([(0j, 1.0 + 0j)] * (degree - leading_power))

    factors = []
    log_scale = np.log(abs(leading))
    phase = cmath.exp(1j * cmath.phase(leading))
    for index, coefficients in enumerate(raw_factors):
        norm = dual_norm(coefficients, space)
        log_scale += np.log(norm)
        if index == 0:
            coefficients = (coefficients[0] * phase, coefficients[1] * phase)
        factors.append(LinearFactor(
            coefficients=(coefficients[0] / norm, coefficients[1] / norm),
            dual_norm=1.0,
        ))
    factorization = LinearFactorization(
        scale=float(np.exp(log_scale)),
        factors=tuple(factors),
        residual=0.0,
        metadata={'dual_exponent': space.dual_exponent, 'root_count': len(roots)},
    )
    grid = torus_grid()
    residual = float(np.max(np.abs(evaluate_many(polynomial, grid) - evaluate_factorization(factorization, grid))))
    return replace(factorization, residual=residual)
