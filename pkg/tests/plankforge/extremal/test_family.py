import math

import pytest

from plankforge.bounds import BoundKind, estimate_Mn
from plankforge.extremal import build_family, bst_sharpness_check, hilbert_sharpness_check, verify_equality
from plankforge.polynomials import Field, Polynomial
from plankforge.spaces import NormOptions, SpaceSpec


def test_plane_family() -> None:
    family = build_family(2, 3, 1)

    assert family.polynomials == (
        Polynomial.monomial((2, 0), Field.REAL),
        Polynomial.monomial((0, 1), Field.REAL),
        Polynomial.monomial((0, 1), Field.REAL),
    )
    assert family.product_exponent == (2, 2)


def test_line_family_repeats_the_coordinate() -> None:
    family = build_family(1, 2, 1)

    assert family.polynomials == (Polynomial.monomial((1,), Field.REAL),) * 2


def test_family_degrees() -> None:
    family = build_family(3, 5, 2)

    assert family.degrees == (6, 6, 2, 2, 2)
    assert family.total_degree == 3 * 2 * (5 - 3 + 1)


@pytest.mark.parametrize(('d', 'n'), ((2, 2), (3, 1)))
def test_family_needs_more_polynomials_than_coordinates(d: int, n: int) -> None:
    with pytest.raises(ValueError, match='n must be > d'):
        build_family(d, n, 1)


def test_plane_family_equality() -> None:
    report = verify_equality(build_family(2, 3, 1), options=NormOptions(seed=1))

    assert math.exp(report.log_product_norm) == pytest.approx(1 / 16, rel=1e-12)
    assert report.ratio == pytest.approx(2.0, rel=1e-12)
    assert report.passed
    assert report.estimate_passed


def test_line_family_ratio_is_one() -> None:
    report = verify_equality(build_family(1, 2, 1), cross_check=False)

    assert report.ratio == pytest.approx(1.0)
    assert report.passed


def test_three_dimensional_family_norm() -> None:
    report = verify_equality(build_family(3, 4, 1), cross_check=False)

    assert math.exp(report.log_product_norm) == pytest.approx(1 / 729, rel=1e-12)
    assert 64 / 46656 == pytest.approx(1 / 729, rel=1e-15)


def test_equality_holds_across_the_grid() -> None:
    for d in range(1, 5):
        for n in range(d + 1, 7):
            for k in range(1, 4):
                report = verify_equality(build_family(d, n, k, Field.COMPLEX), cross_check=False)
                assert report.passed, (d, n, k)
                assert report.ratio == pytest.approx(build_family(d, n, k).expected_ratio, rel=1e-12)


@pytest.mark.parametrize('n', (1, 2, 3, 4, 5))
def test_bst_sharpness(n: int) -> None:
    report = bst_sharpness_check(n)

    assert report.kind is BoundKind.BST
    assert report.log_constant == pytest.approx(n * math.log(n), abs=1e-12)
    assert report.log_product_norm == pytest.approx(-n * math.log(n), abs=1e-12)
    assert report.passed


@pytest.mark.parametrize('n', (2, 3))
def test_hilbert_sharpness(n: int) -> None:
    report = hilbert_sharpness_check(n)

    assert math.exp(0.5 * n * math.log(n) + report.log_product_norm) == pytest.approx(1.0, abs=1e-12)
    assert report.passed


@pytest.mark.parametrize('d', (2, 3))
def test_seeded_search_recovers_the_family_ratio(d: int) -> None:
    family = build_family(d, d + 1, 1)

    result = estimate_Mn(
        SpaceSpec(Field.REAL, d, 1.0),
        family.n,
        budget=0,
        seeds=[family.polynomials],
        options=NormOptions(starts=16, seed=2),
    )

    assert result.value >= d - 1e-3
