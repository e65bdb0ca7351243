from .bounds import (
    brudnyi_ganzburg_bound,
    lemma8_bound,
    lemma8_homogeneous_bound,
    remez_multivariate_bound,
    remez_univariate_bound,
    sublevel_measure_bound,
)
from .chebyshev import chebyshev_T, chebyshev_T_closed_form, chebyshev_T_recurrence, log_chebyshev_T
from .sublevel import Lemma8Report, SublevelEstimate, check_lemma8_integral, estimate_sublevel_measure

__all__ = [
    'chebyshev_T',
    'chebyshev_T_recurrence',
    'chebyshev_T_closed_form',
    'log_chebyshev_T',
    'remez_univariate_bound',
    'brudnyi_ganzburg_bound',
    'remez_multivariate_bound',
    'sublevel_measure_bound',
    'lemma8_bound',
    'lemma8_homogeneous_bound',
    'SublevelEstimate',
    'Lemma8Report',
    'estimate_sublevel_measure',
    'check_lemma8_integral',
]
