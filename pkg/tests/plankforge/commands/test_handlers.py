import math

import pytest

from plankforge.bounds import BoundKind
from plankforge.commands import (
    CommandStatus,
    ConstantSweepHandler,
    ConstantSweepRequest,
    ConstantValueHandler,
    ConstantValueRequest,
    ExtremalFamilyHandler,
    ExtremalFamilyRequest,
    HilbertAuditHandler,
    HilbertAuditRequest,
    PlankHandler,
    PlankRequest,
    PolarizationHandler,
    PolarizationRequest,
    SharpnessHandler,
    SharpnessRequest,
    VerifyInequalityHandler,
    VerifyInequalityRequest,
)
from plankforge.planks import Regime, WitnessOptions
from plankforge.polynomials import Field, Polynomial
from plankforge.spaces import NormOptions, SpaceSpec

COMPLEX_PLANE = SpaceSpec(Field.COMPLEX, 2, 2.0)
FAST = NormOptions(starts=16, seed=1)


def test_constant_value() -> None:
    result = ConstantValueHandler().handle(ConstantValueRequest(BoundKind.BST, (1, 1)))

    assert result.command == 'constants'
    assert result.payload['log_value'] == pytest.approx(math.log(4))
    assert result.payload['value_if_finite'] == pytest.approx(4.0)


def test_sweep_rows_force_p_for_hilbert_kinds() -> None:
    request = ConstantSweepRequest((BoundKind.HILBERT_REAL, BoundKind.FINITE_DIM), Field.REAL, (1, 2), (2, 3, 4), 2)

    result = ConstantSweepHandler().handle(request)

    assert len(result.rows) == 2 * 2 * 3
    assert {row['p'] for row in result.rows if row['kind'] == 'eq4'} == {2.0}
    assert {row['p'] for row in result.rows if row['kind'] == 'eq6'} == {''}
    assert result.payload == {'rows': 12}


def test_audit_ratio_matches() -> None:
    result = HilbertAuditHandler().handle(HilbertAuditRequest())

    assert result.status is CommandStatus.OK


def test_plank_handler_reports_success() -> None:
    coordinates = tuple(Polynomial.coordinate(i, 2, Field.COMPLEX) for i in range(2))
    request = PlankRequest(coordinates, COMPLEX_PLANE, (0.2, 0.2), Regime.BST, options=WitnessOptions(norm=FAST))

    result = PlankHandler().handle(request)

    assert result.status is CommandStatus.OK
    assert result.payload['report'].success
    assert [estimate.value for estimate in result.payload['norm_estimates']] == pytest.approx([1.0, 1.0], abs=1e-9)


def test_plank_request_needs_one_radius_per_polynomial() -> None:
    with pytest.raises(ValueError, match='need as many radii'):
        PlankRequest((Polynomial.coordinate(0, 2, Field.COMPLEX),), COMPLEX_PLANE, (0.1, 0.1), Regime.BST)


def test_extremal_handler_checks_the_family() -> None:
    result = ExtremalFamilyHandler().handle(ExtremalFamilyRequest(2, 3, 1, cross_check=False))

    assert result.status is CommandStatus.OK
    assert result.payload['total_degree'] == 4


def test_sharpness_handler_rejects_other_kinds() -> None:
    with pytest.raises(ValueError, match='eq2 and eq3 only'):
        SharpnessRequest(BoundKind.LP, 2)

    assert SharpnessHandler().handle(SharpnessRequest(BoundKind.BST, 3)).status is CommandStatus.OK


def test_polarization_forms_must_match_k() -> None:
    form = Polynomial.from_terms(2, Field.COMPLEX, {(1, 1): 1.0})
    request = PolarizationRequest(COMPLEX_PLANE, 3, budget=0, binary_forms=(form,), options=FAST)

    with pytest.raises(ValueError, match='degree k=3'):
        PolarizationHandler().handle(request)


def test_polarization_seeds_from_a_binary_form() -> None:
    form = Polynomial.from_terms(2, Field.COMPLEX, {(1, 1): 1.0})
    request = PolarizationRequest(COMPLEX_PLANE, 2, budget=0, binary_forms=(form,), options=FAST)

    result = PolarizationHandler().handle(request).payload['result']

    assert result.value >= 2.0 - 1e-6


def test_verify_inequality_handler_on_coordinates() -> None:
    coordinates = tuple(Polynomial.coordinate(i, 2, Field.COMPLEX) for i in range(2))
    request = VerifyInequalityRequest(coordinates, COMPLEX_PLANE, BoundKind.BST, options=FAST)

    result = VerifyInequalityHandler().handle(request)

    assert result.status is CommandStatus.OK
