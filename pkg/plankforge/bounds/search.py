from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from plankforge.polynomials.arithmetic import multiply_all, power, scale
from plankforge.polynomials.random import perturb, random_homogeneous_form, random_linear_form
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.norms import dual_norm, log_monomial_norm
from plankforge.spaces.optimizer import estimate_sup_norm
from plankforge.spaces.types import NormOptions, SpaceSpec
from .types import SearchResult

logger = logging.getLogger(__name__)

RESTART_SHARE = 0.7
PRODUCT_STARTS_FACTOR = 4
INITIAL_SIGMA = 0.5

Candidate = tuple[Polynomial, ...]


class RatioScorer:
    """log prod ||P_i|| - log ||prod P_i||, exact for monomials and linear forms, estimated otherwise."""

    def __init__(self, space: SpaceSpec, options: NormOptions) -> None:
        self._space = space
        self._options = options

    def log_norm(self, polynomial: Polynomial, starts_factor: int = 1) -> float:
        if polynomial.is_monomial:
            alpha, coefficient = polynomial.terms[0]
            return math.log(abs(coefficient)) + log_monomial_norm(alpha, self._space)
        if polynomial.is_homogeneous and polynomial.degree == 1:
            coefficients = [polynomial.coefficient(tuple(int(i == j) for j in range(polynomial.dim)))
                            for i in range(polynomial.dim)]
            return math.log(dual_norm(coefficients, self._space))
        options = self._options.with_starts(starts_factor * self._options.resolved_starts(self._space))
        return estimate_sup_norm(polynomial, self._space, options).log_value

    def log_ratio(self, candidate: Candidate) -> float:
        log_factors = math.fsum(self.log_norm(polynomial) for polynomial in candidate)
        return log_factors - self.log_norm(multiply_all(candidate), PRODUCT_STARTS_FACTOR)


def _coordinate_power(index: int, degree: int, space: SpaceSpec) -> Polynomial:
    coordinate = Polynomial.coordinate(index % space.d, space.d, space.field)
    return power(coordinate, degree)


def _check_seed(candidate: Sequence[Polynomial], n: int, space: SpaceSpec) -> Candidate:
    candidate = tuple(candidate)
    if len(candidate) != n:
        raise ValueError(f'seed tuples must contain {n} polynomials, got {len(candidate)}')
    for polynomial in candidate:
        if polynomial.dim != space.d:
            raise ValueError(f'seed polynomial dimension {polynomial.dim} != space dimension {space.d}')
        if polynomial.is_zero or polynomial.degree < 1:
            raise ValueError('seed polynomials must be nonzero with degree >= 1')
    return candidate


class _StochasticSearch:
    def __init__(
        self,
        score: Callable[[Candidate], float],
        propose: Callable[[np.random.Generator], Candidate],
        refine: Callable[[Candidate, float, np.random.Generator], Candidate],
        workers: int,
    ) -> None:
        self._score = score
        self._propose = propose
        self._refine = refine
        self._workers = workers

    def _scored_restart(self, seed: int) -> tuple[float, Candidate]:
        candidate = self._propose(np.random.default_rng(seed))
        return self._score(candidate), candidate

    def run(self, fixed: Sequence[Candidate], budget: int, seed: int) -> tuple[float, Candidate, int]:
        scored = [(self._score(candidate), candidate) for candidate in fixed]

        restarts = math.ceil(RESTART_SHARE * budget)
        seeds = [seed + index for index in range(restarts)]
        if self._workers > 1:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                scored.extend(pool.map(self._scored_restart, seeds))
        else:
            scored.extend(self._scored_restart(restart_seed) for restart_seed in seeds)

        best_score, best = scored[0]
        for score, candidate in scored[1:]:
            if score > best_score:
                best_score, best = score, candidate

        refinements = budget - restarts
        rng = np.random.default_rng(seed + restarts)
        for step in range(refinements):
            sigma = INITIAL_SIGMA / (1 + step)
            candidate = self._refine(best, sigma, rng)
            score = self._score(candidate)
            if score > best_score:
                logger.debug('refinement step %d improved log ratio to %.12g', step, score)
                best_score, best = score, candidate

        return best_score, best, len(scored) + refinements


def estimate_Mn(
    space: SpaceSpec,
    n: int,
    degree_cap: int = 2,
    budget: int = 64,
    seed: int = 0,
    degrees: Sequence[int] | None = None,
    seeds: Sequence[Sequence[Polynomial]] = (),
    options: NormOptions | None = None,
    workers: int = 1,
) -> SearchResult:
    """Lower bound on M_n: the best (prod ||P_i|| / ||prod P_i||)^{1 / sum k_i} found."""
    if n < 1:
        raise ValueError('n must be >= 1')
    if degree_cap < 1:
        raise ValueError('degree_cap must be >= 1')
    if budget < 0:
        raise ValueError('budget must be >= 0')
    if degrees is not None:
        degrees = tuple(int(k) for k in degrees)
        if len(degrees) != n or any(k < 1 for k in degrees):
            raise ValueError(f'degrees must be {n} integers >= 1')
    options = options or NormOptions(seed=seed)

    if n == 1:
        k = degrees[0] if degrees else 1
        return SearchResult(1.0, 0.0, (_coordinate_power(0, k, space),), (k,), 0, seed)

    scorer = RatioScorer(space, options)

    def score(candidate: Candidate) -> float:
        return scorer.log_ratio(candidate) / sum(polynomial.degree for polynomial in candidate)

    def propose(rng: np.random.Generator) -> Candidate:
        chosen = degrees or tuple(int(k) for k in rng.integers(1, degree_cap + 1, size=n))
        return tuple(random_homogeneous_form(space.d, k, space.field, rng) for k in chosen)

    def refine(candidate: Candidate, sigma: float, rng: np.random.Generator) -> Candidate:
        return tuple(perturb(polynomial, sigma, rng) for polynomial in candidate)

    coordinate_degrees = degrees or (1,) * n
    fixed = [tuple(_coordinate_power(i, k, space) for i, k in enumerate(coordinate_degrees))]
    fixed.extend(_check_seed(candidate, n, space) for candidate in seeds)

    best_score, best, evaluations = _StochasticSearch(score, propose, refine, workers).run(fixed, budget, seed)
    return SearchResult(
        value=math.exp(best_score),
        log_value=best_score,
        polynomials=best,
        degrees=tuple(polynomial.degree for polynomial in best),
        evaluations=evaluations,
        seed=seed,
    )


def _unit_functional(polynomial: Polynomial, space: SpaceSpec) -> Polynomial:
    coefficients = [polynomial.coefficient(tuple(int(i == j) for j in range(space.d))) for i in range(space.d)]
    norm = dual_norm(coefficients, space)
    if norm == 0:
        return Polynomial.coordinate(0, space.d, space.field)
    return scale(polynomial, 1.0 / norm)


def estimate_polarization_constant(
    space: SpaceSpec,
    k: int,
    budget: int = 64,
    seed: int = 0,
    seeds: Sequence[Sequence[Polynomial]] = (),
    options: NormOptions | None = None,
    workers: int = 1,
) -> SearchResult:
    """Lower bound on c_k: the best prod ||phi_i|| / ||prod phi_i|| over k linear functionals."""
    if k < 1:
        raise ValueError('k must be >= 1')
    if budget < 0:
        raise ValueError('budget must be >= 0')
    options = options or NormOptions(seed=seed)

    if k == 1:
        return SearchResult(1.0, 0.0, (Polynomial.coordinate(0, space.d, space.field),), (1,), 0, seed)

    for candidate in seeds:
        if any(not (polynomial.is_homogeneous and polynomial.degree == 1) for polynomial in candidate):
            raise ValueError('polarization seeds must be linear functionals')

    scorer = RatioScorer(space, options)

    def propose(rng: np.random.Generator) -> Candidate:
        return tuple(_unit_functional(random_linear_form(space.d, space.field, rng), space) for _ in range(k))

    def refine(candidate: Candidate, sigma: float, rng: np.random.Generator) -> Candidate:
        return tuple(_unit_functional(perturb(functional, sigma, rng), space) for functional in candidate)

    fixed = [tuple(Polynomial.coordinate(i % space.d, space.d, space.field) for i in range(k))]
    fixed.extend(
        tuple(_unit_functional(functional, space) for functional in _check_seed(candidate, k, space))
        for candidate in seeds
    )

    best_score, best, evaluations = _StochasticSearch(scorer.log_ratio, propose, refine, workers).run(
        fixed, budget, seed
    )
    return SearchResult(
        value=math.exp(best_score),
        log_value=best_score,
        polynomials=best,
        degrees=(1,) * k,
        evaluations=evaluations,
        seed=seed,
    )
