from .comparison import compare_bounds, hilbert_as_stated_audit, hilbert_comparison_ratios, locate_crossover
from .formulas import BoundFormula
from .registry import BoundRegistry, bound_log_value, default_registry, value_if_finite
from .search import estimate_Mn, estimate_polarization_constant
from .special import harmonic, log_gamma
from .types import BoundKind, BoundSpec, ComparisonReport, HilbertAudit, InequalityReport, SearchResult
from .verification import verify_product_inequality

__all__ = [
    'BoundKind',
    'BoundSpec',
    'ComparisonReport',
    'HilbertAudit',
    'InequalityReport',
    'SearchResult',
    'BoundFormula',
    'BoundRegistry',
    'default_registry',
    'bound_log_value',
    'value_if_finite',
    'log_gamma',
    'harmonic',
    'compare_bounds',
    'locate_crossover',
    'hilbert_comparison_ratios',
    'hilbert_as_stated_audit',
    'verify_product_inequality',
    'estimate_Mn',
    'estimate_polarization_constant',
]
