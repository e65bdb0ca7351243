from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from plankforge.errors import AllocationInfeasibleError, InadmissibleParametersError
from plankforge.tolerances import Tolerances
from .gates import k_constant_ceiling, weight_lemma_gate
from .types import Allocation, AllocationMethod

logger = logging.getLogger(__name__)

FALLBACK_RESTARTS = 64
FALLBACK_ITERATIONS = 2000
FEASIBILITY_CHECK_EVERY = 50
FALLBACK_STEP = 0.05
SIMPLEX_FLOOR = 1e-15
CLOSED_FORM_CEILING = math.exp(-2.0)


def project_to_simplex(points: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto the probability simplex."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    ordered = -np.sort(-points, axis=1)
    cumulative = np.cumsum(ordered, axis=1) - 1.0
    ranks = np.arange(1, points.shape[1] + 1)
    support = ordered - cumulative / ranks > 0
    rho = points.shape[1] - 1 - np.argmax(support[:, ::-1], axis=1)
    theta = cumulative[np.arange(points.shape[0]), rho] / (rho + 1.0)
    return np.maximum(points - theta[:, None], 0.0)


def _floor_to_interior(points: np.ndarray) -> np.ndarray:
    points = np.maximum(points, SIMPLEX_FLOOR)
    return points / points.sum(axis=1, keepdims=True)


def _entropy_terms(t: np.ndarray) -> np.ndarray:
    return np.sum(t * np.log(t), axis=-1)


def weight_lemma_margins(t: Sequence[float], b: Sequence[float]) -> np.ndarray:
    """sum_j t_j ln t_j - t_i ln b_i for every i; all must be >= 0."""
    t = np.asarray(t, dtype=float)
    return _entropy_terms(t) - t * np.log(np.asarray(b, dtype=float))


def k_lemma_margins(t: Sequence[float], b: Sequence[float], K: float) -> np.ndarray:
    """ln K / t_i - ln b_i for every i with b_i > 0; zero targets always pass."""
    t = np.asarray(t, dtype=float)
    b = np.asarray(b, dtype=float)
    margins = np.full(t.shape, np.inf)
    positive = b > 0
    margins[positive] = math.log(K) / t[positive] - np.log(b[positive])
    return margins


def certificate_margin(allocation: Allocation) -> float:
    if allocation.K is not None:
        return float(np.min(k_lemma_margins(allocation.t, allocation.b, allocation.K)))
    return float(np.min(weight_lemma_margins(allocation.t, allocation.b)))


def _check_surface(total: float, target: float, description: str) -> None:
    if not math.isclose(total, target, rel_tol=Tolerances.CONSTRAINT_SURFACE, abs_tol=0.0):
        raise ValueError(f'targets must sum to {description} = {target!r}, got {total!r}')


def _closed_form(b: np.ndarray) -> tuple[np.ndarray, float]:
    invlog = -1.0 / np.log(b)
    log_c = (-1.0 - math.fsum(invlog * np.log(invlog))) / math.fsum(invlog)
    weights = math.exp(log_c) * invlog
    return weights / weights.sum(), math.exp(log_c)


def _fallback_starts(b: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = b.size
    invlog = -1.0 / np.log(b)
    fixed = np.stack([np.full(n, 1.0 / n), invlog / invlog.sum(), b / b.sum()])
    random = rng.dirichlet(np.ones(n), size=FALLBACK_RESTARTS - fixed.shape[0])
    return _floor_to_interior(np.vstack([fixed, random]))


def _numeric_fallback(b: np.ndarray) -> tuple[np.ndarray, float]:
    """Projected subgradient ascent of min_i margin_i(t) over the simplex, all restarts advanced together."""
    log_b = np.log(b)
    rows = np.arange(FALLBACK_RESTARTS)
    points = _fallback_starts(b, np.random.default_rng(0))
    best_points = points.copy()
    best_values = np.full(FALLBACK_RESTARTS, -np.inf)

    for iteration in range(FALLBACK_ITERATIONS):
        margins = _entropy_terms(points)[:, None] - points * log_b
        worst = np.argmin(margins, axis=1)
        values = margins[rows, worst]
        improved = values > best_values
        best_values[improved] = values[improved]
        best_points[improved] = points[improved]
        if iteration % FEASIBILITY_CHECK_EVERY == 0 and best_values.max() > 0:
            break

        subgradient = np.log(points) + 1.0
        subgradient[rows, worst] -= log_b[worst]
        step = FALLBACK_STEP / math.sqrt(iteration + 1)
        points = _floor_to_interior(project_to_simplex(points + step * subgradient))

    index = int(np.argmax(best_values))
    return best_points[index], float(best_values[index])


def allocate_lemma4(b: Sequence[float]) -> Allocation:
    """Weights t on the simplex with prod t_j^{t_j} >= b_i^{t_i} for targets summing to 1/n^{n-1}."""
    b = np.asarray(b, dtype=float)
    n = b.size
    if n == 0:
        raise ValueError('b must not be empty')
    if np.any(b <= 0):
        raise ValueError('b must be > 0')
    _check_surface(math.fsum(b), weight_lemma_gate(n), '1/n^(n-1)')
    targets = tuple(float(x) for x in b)

    if n == 1 or np.all(b == b[0]):
        t = np.full(n, 1.0 / n)
        margin = float(np.min(weight_lemma_margins(t, b)))
        return Allocation(targets, tuple(t.tolist()), math.log(n), AllocationMethod.SYMMETRIC, margin)

    if n >= 3 and np.all(b <= CLOSED_FORM_CEILING):
        t, c = _closed_form(b)
        margin = float(np.min(weight_lemma_margins(t, b)))
        if margin >= -Tolerances.CERTIFICATE:
            return Allocation(targets, tuple(t.tolist()), c, AllocationMethod.CLOSED_FORM, margin)
        logger.info('closed-form weights miss the certificate by %.3g; using numeric search', -margin)
    else:
        logger.debug('no closed form for n=%d; using numeric search', n)

    t, margin = _numeric_fallback(b)
    if margin < -Tolerances.ALLOCATION_FEASIBLE:
        raise AllocationInfeasibleError(f'no simplex weights satisfy the certificate (best margin {margin!r})')
    return Allocation(targets, tuple(t.tolist()), None, AllocationMethod.NUMERIC_FALLBACK, margin)


def allocate_lemma7(b: Sequence[float], K: float) -> Allocation:
    """Weights t on the simplex with K^{1/t_i} >= b_i for targets summing to n K^n."""
    b = np.asarray(b, dtype=float)
    n = b.size
    if n == 0:
        raise ValueError('b must not be empty')
    if np.any(b < 0):
        raise ValueError('b must be >= 0')
    ceiling = k_constant_ceiling(n)
    if not 0 < K <= ceiling * (1.0 + Tolerances.CONSTRAINT_SURFACE):
        raise InadmissibleParametersError(f'K must be in (0, {ceiling!r}], got {K!r}')
    _check_surface(math.fsum(b), n * K ** n, 'n K^n')

    positive = b > 0
    s = np.zeros(n)
    s[positive] = math.log(K) / np.log(b[positive])
    total = math.fsum(s)
    if total > 1.0 + Tolerances.CERTIFICATE:
        raise AllocationInfeasibleError(f'weights ln K / ln b_i sum to {total!r} > 1')

    remainder = 1.0 - total
    if positive.all():
        t = s / total
    elif remainder > 0:
        t = s + remainder / n
    else:
        raise AllocationInfeasibleError('no weight left for zero targets')

    method = AllocationMethod.SYMMETRIC if np.all(b == b[0]) else AllocationMethod.CLOSED_FORM
    margin = float(np.min(k_lemma_margins(t, b, K)))
    if margin < -Tolerances.CERTIFICATE:
        raise AllocationInfeasibleError(f'certificate K^(1/t_i) >= b_i fails by {-margin!r}')
    return Allocation(tuple(float(x) for x in b), tuple(t.tolist()), None, method, margin, K=K)
