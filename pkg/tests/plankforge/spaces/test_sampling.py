import math

import numpy as np
import pytest

from plankforge.polynomials import Field
from plankforge.spaces import SpaceSpec, sample_ball
from plankforge.spaces.norms import lp_norms


@pytest.mark.parametrize('p', (1.0, 1.5, 2.0, 3.0, math.inf))
@pytest.mark.parametrize('field', (Field.REAL, Field.COMPLEX))
def test_samples_lie_in_unit_ball(p: float, field: Field) -> None:
    samples = sample_ball(SpaceSpec(field, 3, p), 2000, seed=4)

    assert samples.shape == (2000, 3)
    assert np.all(lp_norms(samples, p) <= 1.0 + 1e-12)
    assert np.iscomplexobj(samples) == (field is Field.COMPLEX)


def test_sampling_is_deterministic_given_seed() -> None:
    space = SpaceSpec(Field.COMPLEX, 2, 1.5)

    np.testing.assert_array_equal(sample_ball(space, 50, seed=9), sample_ball(space, 50, seed=9))


def test_mean_modulus_on_interval() -> None:
    samples = sample_ball(SpaceSpec(Field.REAL, 1, 2.0), 100_000, seed=1)

    assert np.mean(np.abs(samples)) == pytest.approx(0.5, abs=0.01)


def test_l1_half_plane_has_half_measure() -> None:
    samples = sample_ball(SpaceSpec(Field.REAL, 2, 1.0), 100_000, seed=2)

    assert np.mean(samples[:, 0] > 0) == pytest.approx(0.5, abs=0.01)


def test_disk_radius_distribution_matches_area_ratio() -> None:
    samples = sample_ball(SpaceSpec(Field.REAL, 2, 2.0), 100_000, seed=3)

    assert np.mean(lp_norms(samples, 2.0) <= 0.5) == pytest.approx(0.25, abs=0.01)


def test_complex_line_is_sampled_as_a_disk() -> None:
    samples = sample_ball(SpaceSpec(Field.COMPLEX, 1, 1.0), 100_000, seed=5)

    assert np.mean(np.abs(samples[:, 0]) <= 0.5) == pytest.approx(0.25, abs=0.01)


def test_sample_ball_rejects_empty_requests() -> None:
    with pytest.raises(ValueError, match='count must be >= 1'):
        sample_ball(SpaceSpec(Field.REAL, 1, 2.0), 0)
