from .norms import dual_norm, log_monomial_norm, lp_norms, monomial_norm, vector_norm
from .objective import LogProductObjective
from .optimizer import estimate_sup_norm, multi_start_ascent, normalize_polynomial
from .sampling import sample_ball
from .types import AscentResult, AscentSummary, NormEstimate, NormOptions, SpaceSpec

__all__ = [
    'SpaceSpec',
    'NormOptions',
    'NormEstimate',
    'AscentResult',
    'AscentSummary',
    'LogProductObjective',
    'vector_norm',
    'lp_norms',
    'dual_norm',
    'monomial_norm',
    'log_monomial_norm',
    'sample_ball',
    'multi_start_ascent',
    'estimate_sup_norm',
    'normalize_polynomial',
]
