import itertools
import logging
import math

import pytest

from plankforge.bounds import BoundKind, BoundRegistry, BoundSpec, bound_log_value, default_registry, value_if_finite
from plankforge.bounds.formulas import BstFormula
from plankforge.errors import InadmissibleParametersError
from plankforge.polynomials import Field, Polynomial
from plankforge.spaces import SpaceSpec


@pytest.mark.parametrize(
    ('spec', 'expected'),
    (
        (BoundSpec(BoundKind.BST, (1, 1)), math.log(4.0)),
        (BoundSpec(BoundKind.BST, (2, 1)), math.log(27 / 4)),
        (BoundSpec(BoundKind.HILBERT_COMPLEX, (1, 1)), math.log(2.0)),
        (BoundSpec(BoundKind.LP, (1, 1), p=2.0), math.log(2.0)),
        (BoundSpec(BoundKind.FINITE_DIM, (1,), Field.REAL, d=1), math.log(2 * math.e)),
        (BoundSpec(BoundKind.FINITE_DIM, (1,), Field.COMPLEX, d=1), math.log(8 * math.e) - 0.5 * math.log(2.0)),
        (BoundSpec(BoundKind.HILBERT_REAL, (1,), Field.REAL, d=1), 0.0),
        (BoundSpec(BoundKind.HILBERT_FINITE, (1,), Field.REAL, d=1), math.log(math.e / 4)),
        (BoundSpec(BoundKind.HILBERT_FINITE_DERIVED, (1,), Field.REAL, d=1), math.log(4 * math.e)),
    ),
)
def test_bound_log_value_examples(spec: BoundSpec, expected: float) -> None:
    assert bound_log_value(spec) == pytest.approx(expected, abs=1e-12)


def test_hilbert_real_matches_direct_gamma_formula() -> None:
    spec = BoundSpec(BoundKind.HILBERT_REAL, (2, 3), Field.REAL, d=3)
    total = 5
    expected = 0.5 * math.log(2**total * math.gamma(total + 1.5) / (math.gamma(1.5) * 2 * 6))

    assert bound_log_value(spec) == pytest.approx(expected, abs=1e-12)


def test_as_stated_hilbert_constant_is_below_one_and_warns(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING):
        value = bound_log_value(BoundSpec(BoundKind.HILBERT_FINITE, (1,), Field.REAL, d=1))

    assert math.exp(value) == pytest.approx(math.e / 4)
    assert value < 0
    assert 'prop12-derived' in caplog.text


def test_large_total_degree_stays_finite() -> None:
    spec = BoundSpec(BoundKind.BST, (500,) * 10)

    log_value = bound_log_value(spec)

    assert math.isfinite(log_value)
    assert value_if_finite(log_value) is None
    assert value_if_finite(math.log(4.0)) == pytest.approx(4.0)


def degree_grid():
    for n in range(1, 4):
        yield from itertools.product(range(1, 5), repeat=n)


@pytest.mark.parametrize('kind', [kind for kind in BoundKind if kind is not BoundKind.HILBERT_FINITE])
@pytest.mark.parametrize('field', (Field.REAL, Field.COMPLEX))
def test_admissible_constants_are_at_least_one(kind: BoundKind, field: Field) -> None:
    for degrees in degree_grid():
        for d in (1, 2, 3):
            spec = BoundSpec(kind, degrees, field, d=d, p=1.5)

            assert bound_log_value(spec) >= -1e-12


def test_bst_is_monotone_in_each_degree() -> None:
    for n in range(1, 6):
        for degrees in itertools.product(range(1, 11), repeat=min(n, 2)):
            degrees = degrees + (1,) * (n - len(degrees))
            base = bound_log_value(BoundSpec(BoundKind.BST, degrees))
            for index in range(n):
                bumped = list(degrees)
                bumped[index] += 1

                assert bound_log_value(BoundSpec(BoundKind.BST, tuple(bumped))) >= base


def test_exact_log_domain_identities() -> None:
    for degrees in degree_grid():
        bst = bound_log_value(BoundSpec(BoundKind.BST, degrees))
        hilbert = bound_log_value(BoundSpec(BoundKind.HILBERT_COMPLEX, degrees))
        lp_one = bound_log_value(BoundSpec(BoundKind.LP, degrees, p=1.0))

        assert abs(2 * hilbert - bst) <= 1e-12
        assert abs(lp_one - bst) <= 1e-12


@pytest.mark.parametrize(
    ('spec', 'message'),
    (
        (BoundSpec(BoundKind.LP, (1, 1), p=3.0), 'p in \\[1, 2\\]'),
        (BoundSpec(BoundKind.LP, (1, 1)), 'p in \\[1, 2\\]'),
        (BoundSpec(BoundKind.HILBERT_REAL, (1, 1), Field.REAL), 'requires d'),
        (BoundSpec(BoundKind.FINITE_DIM, (1, 1)), 'requires d'),
    ),
)
def test_inadmissible_parameters_raise(spec: BoundSpec, message: str) -> None:
    with pytest.raises(InadmissibleParametersError, match=message):
        bound_log_value(spec)


@pytest.mark.parametrize(('degrees', 'message'), (((), 'must not be empty'), ((1, 0), 'degrees must be >= 1')))
def test_bound_spec_validation(degrees: tuple[int, ...], message: str) -> None:
    with pytest.raises(ValueError, match=message):
        BoundSpec(BoundKind.BST, degrees)


def test_space_checks_follow_hypotheses() -> None:
    registry = default_registry()

    with pytest.raises(InadmissibleParametersError, match='real spaces'):
        registry.get(BoundKind.HILBERT_COMPLEX).check_space(SpaceSpec(Field.REAL, 2, 2.0))
    with pytest.raises(InadmissibleParametersError, match='p = 2'):
        registry.get(BoundKind.HILBERT_REAL).check_space(SpaceSpec(Field.REAL, 2, 1.0))
    with pytest.raises(InadmissibleParametersError, match='homogeneous'):
        registry.get(BoundKind.LP).check_polynomials(
            (Polynomial.from_terms(1, Field.COMPLEX, {(0,): 1.0, (1,): 1.0}),)
        )
    registry.get(BoundKind.FINITE_DIM).check_space(SpaceSpec(Field.REAL, 2, math.inf))


def test_registry_rejects_duplicates_and_reports_missing_kinds() -> None:
    registry = BoundRegistry()
    registry.register(BstFormula())

    with pytest.raises(ValueError, match='already registered'):
        registry.register(BstFormula())
    with pytest.raises(KeyError, match='No formula registered'):
        registry.get(BoundKind.LP)


def test_formula_rejects_foreign_spec() -> None:
    with pytest.raises(InadmissibleParametersError, match='cannot evaluate'):
        BstFormula().log_value(BoundSpec(BoundKind.LP, (1,), p=1.0))
