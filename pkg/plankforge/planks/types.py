from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

from plankforge.polynomials.types import Polynomial
from plankforge.spaces.optimizer import normalize_polynomial
from plankforge.spaces.types import NormEstimate, NormOptions, SpaceSpec


class Regime(Enum):
    BST = 'bst'
    LP = 'lp'
    K_CUSTOM = 'k-custom'
    FINITE_DIM = 'finite-dim'

    @property
    def uses_weight_lemma(self) -> bool:
        return self in (Regime.BST, Regime.LP)


class AllocationMethod(Enum):
    CLOSED_FORM = 'closed-form'
    NUMERIC_FALLBACK = 'numeric-fallback'
    SYMMETRIC = 'symmetric'


@dataclass(frozen=True, slots=True)
class Allocation:
    """Simplex weights t for targets b; `K` is set when the certificate is K^{1/t_i} >= b_i."""

    b: tuple[float, ...]
    t: tuple[float, ...]
    c: float | None
    method: AllocationMethod
    certificate_margin: float
    K: float | None = None

    def __post_init__(self) -> None:
        if len(self.b) != len(self.t):
            raise ValueError('b and t must have the same length')
        if any(weight <= 0 for weight in self.t):
            raise ValueError('t must be positive')
        if not math.isclose(math.fsum(self.t), 1.0, rel_tol=1e-9):
            raise ValueError('t must sum to 1')


@dataclass(frozen=True, slots=True)
class PlankInstance:
    polynomials: tuple[Polynomial, ...]
    radii: tuple[float, ...]
    space: SpaceSpec
    regime: Regime
    K: float | None = None
    norm_estimates: tuple[NormEstimate, ...] = ()

    def __post_init__(self) -> None:
        if not self.polynomials:
            raise ValueError('polynomials must not be empty')
        if len(self.radii) != len(self.polynomials):
            raise ValueError('radii must match polynomials')
        if any(radius < 0 or math.isnan(radius) for radius in self.radii):
            raise ValueError('radii must be >= 0')
        for polynomial in self.polynomials:
            if polynomial.dim != self.space.d:
                raise ValueError(f'polynomial dimension {polynomial.dim} != space dimension {self.space.d}')
            if polynomial.is_zero or polynomial.degree < 1:
                raise ValueError('polynomials must be nonzero with degree >= 1')
        if self.K is not None and self.K <= 0:
            raise ValueError('K must be > 0')

    @classmethod
    def normalized(
        cls,
        polynomials: Sequence[Polynomial],
        radii: Sequence[float],
        space: SpaceSpec,
        regime: Regime,
        K: float | None = None,
        options: NormOptions | None = None,
    ) -> PlankInstance:
        """Divide each polynomial by its estimated sup-norm before building the instance."""
        pairs = [normalize_polynomial(polynomial, space, options) for polynomial in polynomials]
        return cls(
            polynomials=tuple(polynomial for polynomial, _ in pairs),
            radii=tuple(float(radius) for radius in radii),
            space=space,
            regime=regime,
            K=K,
            norm_estimates=tuple(estimate for _, estimate in pairs),
        )

    @property
    def n(self) -> int:
        return len(self.polynomials)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(polynomial.degree for polynomial in self.polynomials)


@dataclass(frozen=True, slots=True)
class WitnessOptions:
    norm: NormOptions = field(default_factory=NormOptions)
    r_cap: int | None = None

    def __post_init__(self) -> None:
        if self.r_cap is not None and self.r_cap <= 0:
            raise ValueError('r_cap must be > 0')


@dataclass(frozen=True, slots=True)
class PlankReport:
    regime: Regime
    witness: tuple[complex, ...]
    margins: tuple[float, ...]
    active: tuple[int, ...]
    allocation: Allocation
    s: tuple[float, ...]
    r: tuple[int, ...]
    total_degree: int
    objective: float
    success: bool
    diagnostics: dict[str, object] = field(default_factory=dict)
