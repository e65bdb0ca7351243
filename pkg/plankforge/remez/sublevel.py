from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from plankforge.errors import NormalizationError
from plankforge.polynomials.arithmetic import evaluate_many
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.optimizer import estimate_sup_norm
from plankforge.spaces.sampling import sample_ball
from plankforge.spaces.types import NormEstimate, NormOptions, SpaceSpec
from plankforge.tolerances import Tolerances
from .bounds import lemma8_bound, lemma8_homogeneous_bound, sublevel_measure_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SublevelEstimate:
    t: float
    measure: float
    stderr: float
    samples: int
    seed: int
    bound: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.measure <= 1.0:
            raise ValueError('measure must be in [0, 1]')

    @property
    def passed(self) -> bool:
        return self.measure <= self.bound + 3 * self.stderr


@dataclass(frozen=True, slots=True)
class Lemma8Report:
    integral_estimate: float
    stderr: float
    bound: float
    passed: bool
    homogeneous_bound: float | None
    homogeneous_passed: bool | None
    samples: int
    seed: int
    t_max: float


def require_normalized(polynomial: Polynomial, space: SpaceSpec, options: NormOptions | None = None) -> NormEstimate:
    estimate = estimate_sup_norm(polynomial, space, options)
    if abs(estimate.value - 1.0) > Tolerances.NORMALIZED:
        raise NormalizationError(
            f'polynomial must be normalized to sup-norm 1 (estimated {estimate.value!r}); '
            'divide by its estimated norm first'
        )
    return estimate


def ball_batches(space: SpaceSpec, samples: int, seed: int) -> Iterator[np.ndarray]:
    remaining = samples
    batch_index = 0
    while remaining > 0:
        size = min(remaining, Tolerances.MC_BATCH)
        yield sample_ball(space, size, seed=seed + batch_index)
        remaining -= size
        batch_index += 1


def _check_degree(polynomial: Polynomial) -> None:
    if polynomial.degree < 1:
        raise ValueError('polynomial must have degree >= 1')


def estimate_sublevel_measure(
    polynomial: Polynomial,
    space: SpaceSpec,
    t: float,
    samples: int = 100_000,
    seed: int = 0,
    options: NormOptions | None = None,
) -> SublevelEstimate:
    """Monte-Carlo measure of {z in B : |P(z)| <= t} for a polynomial of sup-norm one."""
    if not 0 < t < 1:
        raise ValueError('t must be in (0, 1)')
    if samples < 1:
        raise ValueError('samples must be >= 1')
    _check_degree(polynomial)
    require_normalized(polynomial, space, options)

    hits = 0
    for batch in ball_batches(space, samples, seed):
        hits += int(np.count_nonzero(np.abs(evaluate_many(polynomial, batch)) <= t))

    measure = hits / samples
    return SublevelEstimate(
        t=t,
        measure=measure,
        stderr=math.sqrt(measure * (1.0 - measure) / samples),
        samples=samples,
        seed=seed,
        bound=sublevel_measure_bound(polynomial.degree, space.d, t, space.field),
    )


def homogeneous_bound_applies(polynomial: Polynomial, space: SpaceSpec) -> bool:
    return polynomial.is_homogeneous and space.p == 2 and space.field is Field.REAL


def check_lemma8_integral(
    polynomial: Polynomial,
    space: SpaceSpec,
    samples: int = 100_000,
    t_max: float = Tolerances.INTEGRAL_CUTOFF,
    seed: int = 0,
    options: NormOptions | None = None,
) -> Lemma8Report:
    """Estimate the integral over [0, t_max] of the measure of {|P| <= e^{-t}} as the mean of min(-ln|P|, t_max)."""
    if samples < 2:
        raise ValueError('samples must be >= 2')
    if t_max <= 0:
        raise ValueError('t_max must be > 0')
    _check_degree(polynomial)
    require_normalized(polynomial, space, options)

    total = 0.0
    total_squares = 0.0
    for batch in ball_batches(space, samples, seed):
        with np.errstate(divide='ignore'):
            depths = -np.log(np.abs(evaluate_many(polynomial, batch)))
        depths = np.clip(depths, 0.0, t_max)
        total += float(depths.sum())
        total_squares += float(np.square(depths).sum())

    mean = total / samples
    variance = max(total_squares / samples - mean * mean, 0.0) * samples / (samples - 1)
    stderr = math.sqrt(variance / samples)
    bound = lemma8_bound(polynomial.degree, space.d, space.field)
    passed = mean <= bound + 3 * stderr

    homogeneous_bound = None
    homogeneous_passed = None
    if homogeneous_bound_applies(polynomial, space):
        homogeneous_bound = lemma8_homogeneous_bound(polynomial.degree, space.d)
        homogeneous_passed = mean <= homogeneous_bound + 3 * stderr
    if not passed or homogeneous_passed is False:
        logger.warning('sublevel integral %.6g exceeds its bound %.6g', mean, bound)

    return Lemma8Report(
        integral_estimate=mean,
        stderr=stderr,
        bound=bound,
        passed=passed,
        homogeneous_bound=homogeneous_bound,
        homogeneous_passed=homogeneous_passed,
        samples=samples,
        seed=seed,
        t_max=t_max,
    )
