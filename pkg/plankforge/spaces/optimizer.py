from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from plankforge.errors import DimensionMismatchError
from plankforge.polynomials.arithmetic import evaluate, scale
from plankforge.polynomials.types import Field, Polynomial
from plankforge.tolerances import Tolerances
from .norms import lp_norms
from .objective import LogProductObjective
from .sampling import sample_ball
from .types import AscentResult, AscentSummary, NormEstimate, NormOptions, SpaceSpec

logger = logging.getLogger(__name__)

MAX_START_RESAMPLES = 16


def _real_inner(first: np.ndarray, second: np.ndarray) -> float:
    return float(np.real(np.vdot(first, second)))


def _project_l1_ball(point: np.ndarray) -> np.ndarray:
    moduli = np.abs(point)
    if moduli.sum() <= 1.0:
        return point
    ordered = np.sort(moduli)[::-1]
    cumulative = np.cumsum(ordered) - 1.0
    ranks = np.arange(1, moduli.size + 1)
    rho = np.nonzero(ordered - cumulative / ranks > 0)[0][-1]
    theta = cumulative[rho] / (rho + 1.0)
    shrunk = np.maximum(moduli - theta, 0.0)
    phases = np.divide(point, moduli, out=np.zeros_like(point), where=moduli > 0)
    return phases * shrunk


def project_to_ball(point: np.ndarray, p: float) -> np.ndarray:
    if math.isinf(p):
        moduli = np.abs(point)
        return np.where(moduli > 1.0, point / np.maximum(moduli, 1.0), point)
    if p == 1:
        return _project_l1_ball(point)
    norm = float(lp_norms(point, p))
    return point / norm if norm > 1.0 else point


def push_to_sphere(point: np.ndarray, p: float) -> np.ndarray:
    norm = float(lp_norms(point, p))
    if norm == 0:
        return point
    return point / norm


def norm_subgradient(point: np.ndarray, p: float) -> np.ndarray:
    moduli = np.abs(point)
    phases = np.divide(point, moduli, out=np.zeros_like(point), where=moduli > 0)
    if math.isinf(p):
        subgradient = np.zeros_like(point)
        index = int(np.argmax(moduli))
        subgradient[index] = phases[index]
        return subgradient
    if p == 1:
        return phases
    return phases * moduli ** (p - 1)


def tangent_direction(direction: np.ndarray, point: np.ndarray, p: float) -> np.ndarray:
    normal = norm_subgradient(point, p)
    normal_size = _real_inner(normal, normal)
    if normal_size == 0:
        return direction
    return direction - (_real_inner(normal, direction) / normal_size) * normal


class _StartRunner:
    def __init__(self, objective: LogProductObjective, space: SpaceSpec, options: NormOptions) -> None:
        self._objective = objective
        self._space = space
        self._options = options
        self._homogeneous = objective.is_homogeneous

    def _retract(self, point: np.ndarray) -> np.ndarray:
        projected = project_to_ball(point, self._space.p)
        if self._homogeneous:
            return push_to_sphere(projected, self._space.p)
        return projected

    def _initial_point(self, rng: np.random.Generator, seeded_point) -> tuple[np.ndarray, float]:
        if seeded_point is not None:
            point = self._retract(np.asarray(seeded_point, dtype=complex if self._space.is_complex else float))
            value = self._objective.value(point)
            if math.isfinite(value):
                return point, value

        point = self._retract(sample_ball(self._space, 1, rng=rng)[0])
        value = self._objective.value(point)
        for _ in range(MAX_START_RESAMPLES):
            if math.isfinite(value):
                break
            point = self._retract(sample_ball(self._space, 1, rng=rng)[0])
            value = self._objective.value(point)
        return point, value

    def run(self, start_index: int, seeded_point=None) -> AscentResult:
        rng = np.random.default_rng(self._options.seed + start_index)
        point, value = self._initial_point(rng, seeded_point)
        if not math.isfinite(value):
            return AscentResult(start_index, tuple(complex(x) for x in point), value, 0, False)

        converged = False
        iterations = 0
        for iterations in range(1, self._options.max_iters + 1):
            direction = self._objective.direction(point)
            if self._homogeneous:
                direction = tangent_direction(direction, point, self._space.p)
            if not np.any(direction):
                converged = True
                break

            step = 1.0
            accepted = None
            while step >= Tolerances.MIN_STEP:
                candidate = self._retract(point + step * direction)
                candidate_value = self._objective.value(candidate)
                increase = Tolerances.ARMIJO * _real_inner(direction, candidate - point)
                if math.isfinite(candidate_value) and candidate_value >= value + max(increase, 0.0):
                    accepted = (candidate, candidate_value)
                    break
                step /= 2.0

            if accepted is None:
                converged = True
                break

            # relative change of prod |P_i|^w_i, unchanged when the P_i are rescaled
            change = math.expm1(abs(accepted[1] - value))
            point, value = accepted
            if change < self._options.tol:
                converged = True
                break

        return AscentResult(start_index, tuple(complex(x) for x in point), value, iterations, converged)


def multi_start_ascent(
    objective: LogProductObjective,
    space: SpaceSpec,
    options: NormOptions,
    seeded_points=(),
) -> AscentSummary:
    if objective.dim != space.d:
        raise DimensionMismatchError(f'objective dimension {objective.dim} != space dimension {space.d}')

    runner = _StartRunner(objective, space, options)
    seeded_points = tuple(seeded_points)
    random_starts = options.resolved_starts(space)
    jobs = [(index, seeded_points[index] if index < len(seeded_points) else None)
            for index in range(len(seeded_points) + random_starts)]

    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            results = list(pool.map(lambda job: runner.run(*job), jobs))
    else:
        results = [runner.run(*job) for job in jobs]

    best = results[0]
    for result in results[1:]:
        if result.objective > best.objective:
            best = result

    converged_count = sum(1 for result in results if result.converged)
    if converged_count < len(results):
        logger.info('%d of %d starts hit max_iters=%d', len(results) - converged_count, len(results),
                    options.max_iters)
    return AscentSummary(best=best, starts=len(results), converged_count=converged_count, results=tuple(results))


def _check_space(polynomial: Polynomial, space: SpaceSpec) -> None:
    if polynomial.dim != space.d:
        raise DimensionMismatchError(f'polynomial dimension {polynomial.dim} != space dimension {space.d}')
    if polynomial.field is Field.COMPLEX and not space.is_complex:
        raise DimensionMismatchError('complex polynomials require a complex space')


def estimate_sup_norm(
    polynomial: Polynomial,
    space: SpaceSpec,
    options: NormOptions | None = None,
    seeded_points=(),
) -> NormEstimate:
    options = options or NormOptions()
    _check_space(polynomial, space)

    if polynomial.is_zero:
        return NormEstimate(
            value=0.0,
            argmax=(0j,) * space.d if space.is_complex else (0.0,) * space.d,
            starts=0,
            converged_fraction=1.0,
            seed=options.seed,
        )

    summary = multi_start_ascent(LogProductObjective((polynomial,)), space, options, seeded_points)
    point = summary.best.point if space.is_complex else tuple(x.real for x in summary.best.point)
    value = min(abs(evaluate(polynomial, point)), polynomial.coefficient_l1())
    logger.debug('sup-norm estimate %.17g from start %d', value, summary.best.start_index)
    return NormEstimate(
        value=value,
        argmax=point,
        starts=summary.starts,
        converged_fraction=summary.converged_fraction,
        seed=options.seed,
    )


def normalize_polynomial(
    polynomial: Polynomial,
    space: SpaceSpec,
    options: NormOptions | None = None,
) -> tuple[Polynomial, NormEstimate]:
    estimate = estimate_sup_norm(polynomial, space, options)
    if estimate.value == 0:
        raise ValueError('cannot normalize the zero polynomial')
    return scale(polynomial, 1.0 / estimate.value), estimate
