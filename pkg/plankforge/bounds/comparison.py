from __future__ import annotations

import math

from plankforge.polynomials.types import Field
from .formulas import FiniteDimFormula, HilbertFiniteFormula, HilbertRealFormula, field_constant
from .special import harmonic
from .types import BoundKind, BoundSpec, ComparisonReport, HilbertAudit

CROSSOVER_RANGE = (2, 1_000_000)
AUDIT_TOLERANCE = 1e-15


def _log_pair(n: int, k: int, d: int) -> tuple[float, float]:
    degrees = (k,) * n
    finite_dim = FiniteDimFormula().log_value(BoundSpec(BoundKind.FINITE_DIM, degrees, Field.REAL, d=d))
    hilbert_real = HilbertRealFormula().log_value(BoundSpec(BoundKind.HILBERT_REAL, degrees, Field.REAL, d=d))
    return finite_dim, hilbert_real


def locate_crossover(k: int, d: int, low: int = CROSSOVER_RANGE[0], high: int = CROSSOVER_RANGE[1]) -> int | None:
    """Smallest n in [low, high] at which the finite-dimensional bound beats the real Hilbert bound."""

    def finite_dim_wins(n: int) -> bool:
        finite_dim, hilbert_real = _log_pair(n, k, d)
        return finite_dim < hilbert_real

    if finite_dim_wins(low):
        return low
    if not finite_dim_wins(high):
        return None
    while high - low > 1:
        middle = (low + high) // 2
        if finite_dim_wins(middle):
            high = middle
        else:
            low = middle
    return high


def compare_bounds(n: int, k_common: int, d: int, field: Field = Field.REAL) -> ComparisonReport:
    if field is not Field.REAL:
        raise ValueError('compare_bounds compares real-space bounds only')
    if n < 1 or k_common < 1 or d < 1:
        raise ValueError('n, k_common and d must be >= 1')

    finite_dim, hilbert_real = _log_pair(n, k_common, d)
    return ComparisonReport(
        n=n,
        k=k_common,
        d=d,
        log_finite_dim=finite_dim,
        log_hilbert_real=hilbert_real,
        smaller=BoundKind.FINITE_DIM if finite_dim < hilbert_real else BoundKind.HILBERT_REAL,
        crossover_n=locate_crossover(k_common, d),
    )


def hilbert_comparison_ratios(d: int, field: Field) -> dict[str, float]:
    """Per-degree base of the as-stated Hilbert constant divided by C*2ed and by C*4ed."""
    constant = field_constant(field)
    base = math.exp(harmonic(d * constant)) / 4
    return {
        'ratio_base_2ed': base / (constant * 2 * math.e * d),
        'ratio_base_4ed': base / (constant * 4 * math.e * d),
    }


def hilbert_as_stated_audit() -> HilbertAudit:
    spec = BoundSpec(BoundKind.HILBERT_FINITE, (1,), Field.REAL, d=1, p=2.0)
    as_stated = math.exp(HilbertFiniteFormula().log_value(spec))
    ratio = hilbert_comparison_ratios(1, Field.REAL)['ratio_base_2ed']
    expected = 1 / 8
    return HilbertAudit(
        as_stated_value=as_stated,
        as_stated_below_one=as_stated < 1,
        ratio_base_2ed=ratio,
        ratio_expected=expected,
        ratio_matches=abs(ratio - expected) <= AUDIT_TOLERANCE,
    )
