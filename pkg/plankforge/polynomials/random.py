from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations_with_replacement

import numpy as np

from .types import Field, MultiIndex, Polynomial


def multi_indices_of_degree(dim: int, degree: int) -> Iterator[MultiIndex]:
    for combination in combinations_with_replacement(range(dim), degree):
        alpha = [0] * dim
        for index in combination:
            alpha[index] += 1
        yield tuple(alpha)


def random_coefficients(field: Field, count: int, rng: np.random.Generator) -> np.ndarray:
    if field is Field.REAL:
        return rng.standard_normal(count)
    return (rng.standard_normal(count) + 1j * rng.standard_normal(count)) / np.sqrt(2.0)


def random_homogeneous_form(dim: int, degree: int, field: Field, rng: np.random.Generator) -> Polynomial:
    if degree < 1:
        raise ValueError('degree must be >= 1')
    alphas = list(multi_indices_of_degree(dim, degree))
    coefficients = random_coefficients(field, len(alphas), rng)
    return Polynomial.from_terms(dim, field, zip(alphas, coefficients))


def random_polynomial(dim: int, degree: int, field: Field, rng: np.random.Generator) -> Polynomial:
    """Dense random polynomial of degree at most `degree` with a nonzero top component."""
    if degree < 1:
        raise ValueError('degree must be >= 1')
    alphas = [alpha for level in range(degree + 1) for alpha in multi_indices_of_degree(dim, level)]
    coefficients = random_coefficients(field, len(alphas), rng)
    return Polynomial.from_terms(dim, field, zip(alphas, coefficients))


def random_linear_form(dim: int, field: Field, rng: np.random.Generator) -> Polynomial:
    return Polynomial.linear_form(random_coefficients(field, dim, rng), field)


def perturb(polynomial: Polynomial, sigma: float, rng: np.random.Generator) -> Polynomial:
    noise = random_coefficients(polynomial.field, len(polynomial.terms), rng)
    return Polynomial.from_terms(
        polynomial.dim,
        polynomial.field,
        ((alpha, coefficient + sigma * delta) for (alpha, coefficient), delta in zip(polynomial.terms, noise)),
    )
