from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from plankforge.errors import DimensionMismatchError
from .types import Field, MultiIndex, Polynomial, total_degree


def _check_compatible(first: Polynomial, second: Polynomial) -> None:
    if first.dim != second.dim:
        raise DimensionMismatchError(f'dimension mismatch: {first.dim} != {second.dim}')
    if first.field is not second.field:
        raise DimensionMismatchError(f'field mismatch: {first.field.value} != {second.field.value}')


def as_points(polynomial: Polynomial, points) -> np.ndarray:
    array = np.asarray(points)
    if array.ndim == 1:
        array = array[np.newaxis, :]
    if array.ndim != 2 or array.shape[1] != polynomial.dim:
        raise DimensionMismatchError(f'points must have {polynomial.dim} coordinates, got shape {np.shape(points)}')
    if polynomial.field is Field.COMPLEX or np.iscomplexobj(array):
        return array.astype(complex)
    return array.astype(float)


def _power_tables(points: np.ndarray, max_exponents: np.ndarray) -> list[np.ndarray]:
    tables = []
    for coordinate, max_exponent in enumerate(max_exponents):
        table = np.empty((int(max_exponent) + 1, points.shape[0]), dtype=points.dtype)
        table[0] = 1
        for exponent in range(1, int(max_exponent) + 1):
            table[exponent] = table[exponent - 1] * points[:, coordinate]
        tables.append(table)
    return tables


def evaluate_many(polynomial: Polynomial, points) -> np.ndarray:
    array = as_points(polynomial, points)
    if polynomial.is_zero:
        return np.zeros(array.shape[0], dtype=array.dtype)

    exponents = polynomial.exponent_matrix
    tables = _power_tables(array, exponents.max(axis=0))
    monomials = np.ones((exponents.shape[0], array.shape[0]), dtype=array.dtype)
    for coordinate, table in enumerate(tables):
        monomials *= table[exponents[:, coordinate]]
    return polynomial.coefficient_vector @ monomials


def evaluate(polynomial: Polynomial, point) -> complex | float:
    value = evaluate_many(polynomial, point)[0]
    if np.iscomplexobj(value):
        return complex(value)
    return float(value)


@lru_cache(maxsize=4096)
def partial_derivative(polynomial: Polynomial, index: int) -> Polynomial:
    if not 0 <= index < polynomial.dim:
        raise DimensionMismatchError(f'partial index {index} outside [0, {polynomial.dim})')
    terms: dict[MultiIndex, complex] = {}
    for alpha, coefficient in polynomial.terms:
        if alpha[index] == 0:
            continue
        reduced = alpha[:index] + (alpha[index] - 1,) + alpha[index + 1:]
        terms[reduced] = coefficient * alpha[index]
    return Polynomial.from_terms(polynomial.dim, polynomial.field, terms)


def gradient_many(polynomial: Polynomial, points) -> np.ndarray:
    array = as_points(polynomial, points)
    columns = [evaluate_many(partial_derivative(polynomial, index), array) for index in range(polynomial.dim)]
    return np.stack(columns, axis=1)


def gradient(polynomial: Polynomial, point) -> np.ndarray:
    return gradient_many(polynomial, point)[0]


def add(first: Polynomial, second: Polynomial) -> Polynomial:
    _check_compatible(first, second)
    terms = first.as_dict()
    for alpha, coefficient in second.terms:
        terms[alpha] = terms.get(alpha, 0j) + coefficient
    return Polynomial.from_terms(first.dim, first.field, terms)


def scale(polynomial: Polynomial, factor: complex) -> Polynomial:
    if polynomial.field is Field.REAL and complex(factor).imag != 0:
        raise DimensionMismatchError('real polynomials can only be scaled by real factors')
    return Polynomial.from_terms(
        polynomial.dim,
        polynomial.field,
        ((alpha, coefficient * factor) for alpha, coefficient in polynomial.terms),
    )


def multiply(first: Polynomial, second: Polynomial) -> Polynomial:
    _check_compatible(first, second)
    terms: dict[MultiIndex, complex] = {}
    for alpha, first_coefficient in first.terms:
        for beta, second_coefficient in second.terms:
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            terms[gamma] = terms.get(gamma, 0j) + first_coefficient * second_coefficient
    return Polynomial.from_terms(first.dim, first.field, terms)


def multiply_all(polynomials) -> Polynomial:
    polynomials = list(polynomials)
    if not polynomials:
        raise ValueError('multiply_all needs at least one polynomial')
    product = polynomials[0]
    for polynomial in polynomials[1:]:
        product = multiply(product, polynomial)
    return product


def power(polynomial: Polynomial, exponent: int) -> Polynomial:
    if exponent < 1:
        raise ValueError('exponent must be >= 1')
    result = None
    base = polynomial
    while exponent:
        if exponent & 1:
            result = base if result is None else multiply(result, base)
        exponent >>= 1
        if exponent:
            base = multiply(base, base)
    return result


def homogeneous_component(polynomial: Polynomial, degree: int) -> Polynomial:
    if degree < 0:
        raise ValueError('degree must be >= 0')
    return Polynomial(
        dim=polynomial.dim,
        field=polynomial.field,
        terms=tuple((alpha, coefficient) for alpha, coefficient in polynomial.terms if total_degree(alpha) == degree),
    )


def _split_parts(polynomial: Polynomial) -> tuple[Polynomial, Polynomial]:
    real_part = {alpha: coefficient.real for alpha, coefficient in polynomial.terms}
    imaginary_part = {alpha: coefficient.imag for alpha, coefficient in polynomial.terms}
    return (
        Polynomial.from_terms(polynomial.dim, Field.REAL, real_part),
        Polynomial.from_terms(polynomial.dim, Field.REAL, imaginary_part),
    )


def _coordinate_power_in_real_variables(index: int, exponent: int, real_dim: int) -> dict[MultiIndex, complex]:
    # (x + iy)^a expanded binomially on the (x_index, y_index) pair
    terms: dict[MultiIndex, complex] = {}
    for y_exponent in range(exponent + 1):
        alpha = [0] * real_dim
        alpha[2 * index] = exponent - y_exponent
        alpha[2 * index + 1] = y_exponent
        terms[tuple(alpha)] = math.comb(exponent, y_exponent) * (1j**y_exponent)
    return terms


def realify_modulus_squared(polynomial: Polynomial) -> Polynomial:
    """Q(x_1, y_1, ..., x_d, y_d) = |P(x + iy)|^2 as a real polynomial on R^{2d}."""
    if polynomial.field is not Field.COMPLEX:
        raise DimensionMismatchError('realify_modulus_squared requires a complex polynomial')

    real_dim = 2 * polynomial.dim
    expanded: dict[MultiIndex, complex] = {}
    for alpha, coefficient in polynomial.terms:
        term = Polynomial.constant(coefficient, real_dim, Field.COMPLEX)
        for index, exponent in enumerate(alpha):
            if exponent == 0:
                continue
            factor = Polynomial.from_terms(
                real_dim,
                Field.COMPLEX,
                _coordinate_power_in_real_variables(index, exponent, real_dim),
            )
            term = multiply(term, factor)
        for beta, value in term.terms:
            expanded[beta] = expanded.get(beta, 0j) + value

    substituted = Polynomial.from_terms(real_dim, Field.COMPLEX, expanded)
    real_part, imaginary_part = _split_parts(substituted)
    return add(multiply(real_part, real_part), multiply(imaginary_part, imaginary_part))


def realify_point(point) -> np.ndarray:
    array = np.asarray(point, dtype=complex)
    interleaved = np.empty(array.shape[:-1] + (2 * array.shape[-1],), dtype=float)
    interleaved[..., 0::2] = array.real
    interleaved[..., 1::2] = array.imag
    return interleaved
