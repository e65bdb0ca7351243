from __future__ import annotations

import logging
import math
from collections.abc import Sequence

from plankforge.errors import DimensionMismatchError
from plankforge.polynomials.arithmetic import multiply_all
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.optimizer import estimate_sup_norm
from plankforge.spaces.types import NormEstimate, NormOptions, SpaceSpec
from plankforge.tolerances import Tolerances
from .registry import BoundRegistry, default_registry
from .types import BoundKind, InequalityReport

logger = logging.getLogger(__name__)

RETRY_FACTOR = 4


def _check_inputs(polynomials: Sequence[Polynomial], space: SpaceSpec) -> None:
    if not polynomials:
        raise ValueError('polynomials must not be empty')
    for polynomial in polynomials:
        if polynomial.dim != space.d:
            raise DimensionMismatchError(f'polynomial dimension {polynomial.dim} != space dimension {space.d}')
        if polynomial.field is Field.COMPLEX and not space.is_complex:
            raise DimensionMismatchError('complex polynomials require a complex space')
        if polynomial.is_zero:
            raise ValueError('polynomials must be nonzero')
        if polynomial.degree < 1:
            raise ValueError('polynomials must have degree >= 1')


def verify_product_inequality(
    polynomials: Sequence[Polynomial],
    space: SpaceSpec,
    kind: BoundKind,
    options: NormOptions | None = None,
    rtol: float = Tolerances.INEQUALITY_RTOL,
    registry: BoundRegistry | None = None,
) -> InequalityReport:
    """Check M * est(prod P_i) >= prod est(P_i) * (1 - rtol), the direction that stays sound for lower bounds."""
    polynomials = tuple(polynomials)
    options = options or NormOptions()
    registry = registry or default_registry()
    _check_inputs(polynomials, space)

    formula = registry.get(kind)
    formula.check_space(space)
    formula.check_polynomials(polynomials)
    log_constant = formula.log_value(formula.spec_for(space, [polynomial.degree for polynomial in polynomials]))

    estimates = [estimate_sup_norm(polynomial, space, options) for polynomial in polynomials]
    log_norms = tuple(estimate.log_value for estimate in estimates)
    product = multiply_all(polynomials)
    product_estimate = estimate_sup_norm(product, space, options, [estimate.argmax for estimate in estimates])

    def margin_for(estimate: NormEstimate) -> float:
        return log_constant + estimate.log_value - math.fsum(log_norms) - math.log1p(-rtol)

    margin = margin_for(product_estimate)
    retried = False
    if margin < 0:
        retried = True
        starts = RETRY_FACTOR * options.resolved_starts(space)
        logger.info('product inequality %s failed with margin %.3g; retrying with %d starts', kind.value, margin,
                    starts)
        retry = estimate_sup_norm(product, space, options.with_starts(starts))
        if retry.value > product_estimate.value:
            product_estimate = retry
            margin = margin_for(product_estimate)

    passed = margin >= 0
    if not passed:
        logger.warning('product inequality %s violated by %.3g in log domain', kind.value, -margin)
    return InequalityReport(
        kind=kind,
        log_constant=log_constant,
        log_norms=log_norms,
        log_product_norm=product_estimate.log_value,
        log_margin=margin,
        passed=passed,
        retried=retried,
        diagnostics={
            'starts': product_estimate.starts,
            'product_converged_fraction': product_estimate.converged_fraction,
            'min_factor_converged_fraction': min(estimate.converged_fraction for estimate in estimates),
            'product_degree': product.degree,
        },
    )
