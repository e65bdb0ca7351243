from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from plankforge.polynomials.types import Field, Polynomial


class BoundKind(Enum):
    BST = 'eq2'
    HILBERT_COMPLEX = 'eq3'
    HILBERT_REAL = 'eq4'
    LP = 'eq5'
    FINITE_DIM = 'eq6'
    HILBERT_FINITE = 'prop12'
    HILBERT_FINITE_DERIVED = 'prop12-derived'


@dataclass(frozen=True, slots=True)
class BoundSpec:
    kind: BoundKind
    degrees: tuple[int, ...]
    field: Field = Field.COMPLEX
    d: int | None = None
    p: float | None = None

    def __post_init__(self) -> None:
        if not self.degrees:
            raise ValueError('degrees must not be empty')
        if any(degree < 1 for degree in self.degrees):
            raise ValueError('degrees must be >= 1')
        if self.d is not None and self.d <= 0:
            raise ValueError('d must be > 0')
        if self.p is not None and (math.isnan(self.p) or self.p < 1):
            raise ValueError('p must be in [1, inf]')

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True, slots=True)
class ComparisonReport:
    n: int
    k: int
    d: int
    log_finite_dim: float
    log_hilbert_real: float
    smaller: BoundKind
    crossover_n: int | None


@dataclass(frozen=True, slots=True)
class HilbertAudit:
    as_stated_value: float
    as_stated_below_one: bool
    ratio_base_2ed: float
    ratio_expected: float
    ratio_matches: bool


@dataclass(frozen=True, slots=True)
class InequalityReport:
    kind: BoundKind
    log_constant: float
    log_norms: tuple[float, ...]
    log_product_norm: float
    log_margin: float
    passed: bool
    retried: bool
    diagnostics: dict[str, object] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class SearchResult:
    value: float
    log_value: float
    polynomials: tuple[Polynomial, ...]
    degrees: tuple[int, ...]
    evaluations: int
    seed: int
