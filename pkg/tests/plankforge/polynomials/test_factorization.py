import math

import numpy as np
import pytest

from plankforge.errors import DimensionMismatchError
from plankforge.polynomials import Field, Polynomial
from plankforge.polynomials.factorization import evaluate_factorization, factor_binary_form, torus_grid
from plankforge.polynomials.random import random_homogeneous_form
from plankforge.spaces import NormOptions, SpaceSpec, normalize_polynomial

HILBERT_PLANE = SpaceSpec(Field.COMPLEX, 2, 2.0)


def normalized_directions(factorization) -> set[tuple[complex, complex]]:
    directions = set()
    for factor in factorization.factors:
        first, second = factor.coefficients
        pivot = first if abs(first) > 1e-9 else second
        directions.add(tuple(complex(round(c.real, 9), round(c.imag, 9)) for c in (first / pivot, second / pivot)))
    return directions


def test_product_of_coordinates_factors_into_coordinates() -> None:
    factorization = factor_binary_form(Polynomial.monomial((1, 1), Field.COMPLEX), HILBERT_PLANE)

    assert factorization.degree == 2
    assert normalized_directions(factorization) == {(1, 0), (0, 1)}
    assert factorization.scale == pytest.approx(1.0)
    assert factorization.residual <= 1e-12


def test_difference_of_squares_factors() -> None:
    polynomial = Polynomial.from_terms(2, Field.COMPLEX, {(2, 0): 1.0, (0, 2): -1.0})

    factorization = factor_binary_form(polynomial, HILBERT_PLANE)

    assert normalized_directions(factorization) == {(1, -1), (1, 1)}
    assert factorization.scale == pytest.approx(2.0)
    assert factorization.residual <= 1e-12


def test_factors_have_unit_dual_norm() -> None:
    space = SpaceSpec(Field.COMPLEX, 2, 1.0)
    polynomial = random_homogeneous_form(2, 4, Field.COMPLEX, np.random.default_rng(4))

    factorization = factor_binary_form(polynomial, space)

    for factor in factorization.factors:
        assert max(abs(c) for c in factor.coefficients) == pytest.approx(1.0)


def test_random_degree_six_form_reconstructs() -> None:
    polynomial = random_homogeneous_form(2, 6, Field.COMPLEX, np.random.default_rng(31))

    factorization = factor_binary_form(polynomial, HILBERT_PLANE)

    assert factorization.degree == 6
    assert factorization.residual <= 1e-8
    grid = torus_grid()
    assert np.max(np.abs(evaluate_factorization(factorization, grid))) > 0


def test_normalized_form_has_scale_at_least_one() -> None:
    rng = np.random.default_rng(12)
    polynomial = random_homogeneous_form(2, 3, Field.COMPLEX, rng)
    normalized, _estimate = normalize_polynomial(polynomial, HILBERT_PLANE, NormOptions(starts=32, seed=1))

    factorization = factor_binary_form(normalized, HILBERT_PLANE)

    assert factorization.scale >= 1 - 1e-9


def test_powers_of_second_coordinate_become_factors() -> None:
    polynomial = Polynomial.from_terms(2, Field.COMPLEX, {(1, 2): 2j})

    factorization = factor_binary_form(polynomial, HILBERT_PLANE)

    assert factorization.scale == pytest.approx(2.0)
    assert sorted(normalized_directions(factorization), key=lambda pair: abs(pair[0])) == [(0, 1), (1, 0)]
    assert factorization.residual <= 1e-12
    assert math.isclose(factorization.metadata['dual_exponent'], 2.0)


@pytest.mark.parametrize(
    ('polynomial', 'error', 'message'),
    (
        (Polynomial.zero(2, Field.COMPLEX), ValueError, 'zero polynomial'),
        (Polynomial.from_terms(2, Field.COMPLEX, {(1, 0): 1.0, (0, 0): 1.0}), ValueError, 'homogeneous'),
        (Polynomial.monomial((1, 1, 1), Field.COMPLEX), DimensionMismatchError, 'dim == 2'),
    ),
)
def test_factor_binary_form_rejects_invalid_input(polynomial: Polynomial, error: type, message: str) -> None:
    with pytest.raises(error, match=message):
        factor_binary_form(polynomial, HILBERT_PLANE)
