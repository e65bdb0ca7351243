import math

import pytest

from plankforge.errors import FeasibilityError, InadmissibleParametersError
from plankforge.planks import (
    PlankInstance,
    Regime,
    check_gate,
    enforce_gate,
    finite_dim_constant,
    k_constant_ceiling,
    weight_lemma_gate,
)
from plankforge.polynomials import Field, Polynomial
from plankforge.spaces import SpaceSpec

COMPLEX_PLANE = SpaceSpec(Field.COMPLEX, 2, 2.0)
REAL_PLANE = SpaceSpec(Field.REAL, 2, 2.0)


def coordinates(field: Field) -> tuple[Polynomial, ...]:
    return Polynomial.coordinate(0, 2, field), Polynomial.coordinate(1, 2, field)


def instance(radii, regime: Regime, space: SpaceSpec = COMPLEX_PLANE, K: float | None = None) -> PlankInstance:
    return PlankInstance(coordinates(space.field), tuple(radii), space, regime, K=K)


@pytest.mark.parametrize(('n', 'expected'), ((1, 1.0), (2, 0.5), (3, 1 / 9), (4, 1 / 64)))
def test_weight_lemma_gate(n: int, expected: float) -> None:
    assert weight_lemma_gate(n) == pytest.approx(expected, rel=1e-14)


def test_k_ceiling_and_finite_dim_constant() -> None:
    assert k_constant_ceiling(1) == pytest.approx(math.exp(-2))
    assert finite_dim_constant(3, Field.REAL) == pytest.approx(1 / (12 * math.e))
    assert finite_dim_constant(3, Field.COMPLEX) == pytest.approx(1 / (24 * math.e))


def test_boundary_sum_is_admitted() -> None:
    gate = enforce_gate(instance((0.25, 0.25), Regime.BST))

    assert gate.lhs == 0.5
    assert gate.rhs == 0.5


def test_bst_gate_violation_names_the_inequality() -> None:
    with pytest.raises(FeasibilityError, match='sum a_i <= 1/n\\^\\(n-1\\)') as error:
        enforce_gate(instance((0.3, 0.3), Regime.BST))

    assert error.value.lhs == pytest.approx(0.6)


def test_lp_gate_uses_powered_radii() -> None:
    gate = check_gate(instance((0.5, 0.5), Regime.LP))

    assert gate.lhs == pytest.approx(0.5)
    assert gate.passed


def test_lp_gate_rejects_large_exponent() -> None:
    space = SpaceSpec(Field.COMPLEX, 2, 3.0)

    with pytest.raises(InadmissibleParametersError, match='p in \\[1, 2\\]'):
        check_gate(instance((0.1, 0.1), Regime.LP, space))


def test_lp_gate_requires_homogeneous_polynomials() -> None:
    shifted = Polynomial.from_terms(2, Field.COMPLEX, {(1, 0): 1.0, (0, 0): 0.5})
    plank = PlankInstance((shifted,), (0.1,), COMPLEX_PLANE, Regime.LP)

    with pytest.raises(InadmissibleParametersError, match='homogeneous'):
        check_gate(plank)


@pytest.mark.parametrize('regime', (Regime.BST, Regime.LP))
def test_weight_lemma_regimes_require_complex_space(regime: Regime) -> None:
    with pytest.raises(InadmissibleParametersError, match='complex space'):
        check_gate(instance((0.1, 0.1), regime, REAL_PLANE))


def test_k_custom_requires_strictly_small_K() -> None:
    with pytest.raises(InadmissibleParametersError, match='K must be <'):
        check_gate(instance((0.01, 0.01), Regime.K_CUSTOM, REAL_PLANE, K=k_constant_ceiling(2)))


def test_k_custom_requires_K() -> None:
    with pytest.raises(InadmissibleParametersError, match='requires K'):
        check_gate(instance((0.01, 0.01), Regime.K_CUSTOM, REAL_PLANE))


def test_k_custom_budget() -> None:
    gate = check_gate(instance((0.04, 0.04), Regime.K_CUSTOM, REAL_PLANE, K=0.2))

    assert gate.rhs == pytest.approx(0.08)
    assert gate.passed


def test_finite_dim_budget_violation() -> None:
    K = finite_dim_constant(2, Field.REAL)

    with pytest.raises(FeasibilityError, match='n K\\^n'):
        enforce_gate(instance((K ** 2, K ** 2 + 1e-3), Regime.FINITE_DIM, REAL_PLANE))


def test_negative_radius_is_rejected() -> None:
    with pytest.raises(ValueError, match='radii must be >= 0'):
        instance((-0.1, 0.1), Regime.BST)
