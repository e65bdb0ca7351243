from __future__ import annotations

import math

from plankforge.bounds.special import harmonic
from plankforge.errors import InadmissibleParametersError
from plankforge.polynomials.types import Field
from .chebyshev import log_chebyshev_T


def _exp_or_inf(log_value: float) -> float:
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf


def _check_degree(k: int) -> None:
    if k < 0:
        raise InadmissibleParametersError('k must be >= 0')


def log_remez_univariate_bound(k: int, interval_length: float, subset_length: float) -> float:
    _check_degree(k)
    if subset_length <= 0:
        raise InadmissibleParametersError('subset measure must be > 0')
    if subset_length > interval_length:
        raise InadmissibleParametersError('subset measure must not exceed the interval length')
    return k * math.log(4.0 * interval_length / subset_length)


def remez_univariate_bound(k: int, interval_length: float, subset_length: float) -> float:
    """(4|I|/|V|)^k: sup over I of a degree-k polynomial against its sup over a measurable V in I."""
    return _exp_or_inf(log_remez_univariate_bound(k, interval_length, subset_length))


def _check_measure(measure: float) -> None:
    if not 0 < measure <= 1:
        raise InadmissibleParametersError('measure must be in (0, 1]')


def log_brudnyi_ganzburg_bound(k: int, d: int, measure: float) -> float:
    _check_degree(k)
    _check_measure(measure)
    if k == 0 or measure == 1.0:
        return 0.0
    # 1 - (1 - measure)^{1/d}, accurate for measures far below machine epsilon
    gap = -math.expm1(math.log1p(-measure) / d)
    if gap == 0.0:
        return math.inf
    return log_chebyshev_T(k, (2.0 - gap) / gap)


def brudnyi_ganzburg_bound(k: int, d: int, measure: float) -> float:
    """T_k((1 + (1 - measure)^{1/d}) / (1 - (1 - measure)^{1/d})) for a subset of the given normalized measure."""
    return _exp_or_inf(log_brudnyi_ganzburg_bound(k, d, measure))


def log_remez_multivariate_bound(k: int, d: int, measure: float) -> float:
    _check_degree(k)
    _check_measure(measure)
    return k * math.log(4.0 * d / measure) - math.log(2.0)


def remez_multivariate_bound(k: int, d: int, measure: float) -> float:
    return _exp_or_inf(log_remez_multivariate_bound(k, d, measure))


def sublevel_measure_bound(k: int, d: int, t: float, field: Field = Field.REAL) -> float:
    """Upper bound 4d(t/2)^{1/k} on the measure of {|P| <= t} for a norm-one P of degree k."""
    if k < 1:
        raise InadmissibleParametersError('k must be >= 1')
    if not 0 < t < 1:
        raise InadmissibleParametersError('t must be in (0, 1)')
    if field is Field.COMPLEX:
        return 4.0 * (2 * d) * (t * t / 2.0) ** (1.0 / (2 * k))
    return 4.0 * d * (t / 2.0) ** (1.0 / k)


def lemma8_bound(k: int, d: int, field: Field = Field.REAL) -> float:
    """Bound on the integral over t >= 0 of the measure of {|P| <= e^{-t}}."""
    if k < 1:
        raise InadmissibleParametersError('k must be >= 1')
    if field is Field.COMPLEX:
        return 0.5 * (2 * k * math.log(8.0 * d) - math.log(2.0) + 2 * k)
    return k * math.log(4.0 * d) - math.log(2.0) + k


def lemma8_homogeneous_bound(k: int, d: int) -> float:
    if k < 1:
        raise InadmissibleParametersError('k must be >= 1')
    return k * (math.log(4.0) + harmonic(d))
