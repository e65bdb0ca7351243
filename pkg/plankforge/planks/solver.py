from __future__ import annotations

import logging
import math

from plankforge.errors import AllocationInfeasibleError
from plankforge.polynomials.arithmetic import evaluate
from plankforge.spaces.norms import vector_norm
from plankforge.spaces.objective import LogProductObjective
from plankforge.spaces.optimizer import multi_start_ascent
from plankforge.spaces.types import AscentResult
from plankforge.tolerances import Tolerances
from .allocation import allocate_lemma4, allocate_lemma7, certificate_margin
from .gates import enforce_gate, radius_exponent, resolve_K, weight_lemma_gate
from .rationalize import rationalize_lemma5
from .types import Allocation, PlankInstance, PlankReport, WitnessOptions

logger = logging.getLogger(__name__)

EXPONENT_CAP_FACTOR = 64


def default_r_cap(degrees: tuple[int, ...]) -> int:
    return EXPONENT_CAP_FACTOR * len(degrees) * math.prod(degrees)


def _weight_lemma_targets(instance: PlankInstance) -> tuple[tuple[int, ...], list[float]]:
    exponent = radius_exponent(instance)
    active = tuple(i for i, radius in enumerate(instance.radii) if radius > 0) or tuple(range(instance.n))
    powers = [instance.radii[i] ** exponent for i in active]
    slack = weight_lemma_gate(len(active)) - math.fsum(powers)
    return active, [power + slack / len(active) for power in powers]


def _k_lemma_targets(instance: PlankInstance, K: float) -> list[float]:
    slack = instance.n * K ** instance.n - math.fsum(instance.radii)
    return [radius + slack / instance.n for radius in instance.radii]


def allocate(instance: PlankInstance) -> tuple[tuple[int, ...], Allocation]:
    """Indices entering the objective and their certified weights."""
    if instance.regime.uses_weight_lemma:
        active, b = _weight_lemma_targets(instance)
        allocation = allocate_lemma4(b)
    else:
        active = tuple(range(instance.n))
        K = resolve_K(instance)
        allocation = allocate_lemma7(_k_lemma_targets(instance, K), K)

    margin = certificate_margin(allocation)
    if margin < -Tolerances.ALLOCATION_FEASIBLE:
        raise AllocationInfeasibleError(f'allocation certificate fails by {-margin!r}')
    return active, allocation


def plank_margins(instance: PlankInstance, point) -> tuple[float, ...]:
    return tuple(
        abs(evaluate(polynomial, point)) - radius ** polynomial.degree
        for polynomial, radius in zip(instance.polynomials, instance.radii)
    )


def _as_space_point(instance: PlankInstance, result: AscentResult) -> tuple[complex, ...]:
    if instance.space.is_complex:
        return result.point
    return tuple(complex(x.real) for x in result.point)


def find_witness(instance: PlankInstance, options: WitnessOptions | None = None) -> PlankReport:
    """Point z in the unit ball with |P_i(z)| >= a_i^{k_i} for every i, found by maximizing sum w_i ln|P_i|."""
    options = options or WitnessOptions()
    gate = enforce_gate(instance)
    active, allocation = allocate(instance)

    degrees = tuple(instance.degrees[i] for i in active)
    r_cap = options.r_cap if options.r_cap is not None else default_r_cap(degrees)
    s, r = rationalize_lemma5(allocation.t, degrees, r_cap)
    total_degree = sum(k * r_i for k, r_i in zip(degrees, r))

    objective = LogProductObjective(
        [instance.polynomials[i] for i in active],
        [r_i / total_degree for r_i in r],
    )
    seeded_points = [instance.norm_estimates[i].argmax for i in active] if instance.norm_estimates else []
    summary = multi_start_ascent(objective, instance.space, options.norm, seeded_points)

    chosen = summary.best
    margins = plank_margins(instance, _as_space_point(instance, chosen))
    if min(margins) < -Tolerances.MARGIN:
        for result in summary.results:
            if not math.isfinite(result.objective):
                continue
            candidate = plank_margins(instance, _as_space_point(instance, result))
            if min(candidate) >= -Tolerances.MARGIN:
                logger.info('best start %d misses a plank; start %d clears all of them', chosen.start_index,
                            result.start_index)
                chosen, margins = result, candidate
                break

    success = min(margins) >= -Tolerances.MARGIN
    if not success:
        logger.warning('no witness found: worst margin %.3g at start %d', min(margins), chosen.start_index)

    witness = _as_space_point(instance, chosen)
    return PlankReport(
        regime=instance.regime,
        witness=witness,
        margins=margins,
        active=active,
        allocation=allocation,
        s=s,
        r=r,
        total_degree=total_degree,
        objective=chosen.objective * total_degree,
        success=success,
        diagnostics={
            'gate': gate.name,
            'gate_lhs': gate.lhs,
            'gate_rhs': gate.rhs,
            'r_cap': r_cap,
            'starts': summary.starts,
            'converged_fraction': summary.converged_fraction,
            'best_start': chosen.start_index,
            'witness_norm': vector_norm(witness, instance.space),
        },
    )
