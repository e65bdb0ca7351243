from __future__ import annotations

import math
from dataclasses import dataclass

from plankforge.polynomials.types import Field


def format_exponent(p: float) -> str:
    if math.isinf(p):
        return 'inf'
    if float(p).is_integer():
        return str(int(p))
    return repr(float(p))


@dataclass(frozen=True, slots=True)
class SpaceSpec:
    field: Field
    d: int
    p: float

    def __post_init__(self) -> None:
        if self.d <= 0:
            raise ValueError('d must be > 0')
        if math.isnan(self.p) or self.p < 1:
            raise ValueError('p must be in [1, inf]')

    @property
    def is_sup_norm(self) -> bool:
        return math.isinf(self.p)

    @property
    def dual_exponent(self) -> float:
        if self.p == 1:
            return math.inf
        if self.is_sup_norm:
            return 1.0
        return self.p / (self.p - 1)

    @property
    def is_complex(self) -> bool:
        return self.field is Field.COMPLEX

    def describe(self) -> str:
        return f'lp:p={format_exponent(self.p)},d={self.d},field={self.field.value}'


@dataclass(frozen=True, slots=True)
class NormOptions:
    starts: int | None = None
    max_iters: int = 500
    tol: float = 1e-12
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        if self.starts is not None and self.starts <= 0:
            raise ValueError('starts must be > 0')
        if self.max_iters <= 0:
            raise ValueError('max_iters must be > 0')
        if self.tol <= 0:
            raise ValueError('tol must be > 0')
        if self.workers <= 0:
            raise ValueError('workers must be > 0')

    def resolved_starts(self, space: SpaceSpec) -> int:
        return self.starts if self.starts is not None else 32 * space.d

    def with_starts(self, starts: int) -> NormOptions:
        return NormOptions(starts=starts, max_iters=self.max_iters, tol=self.tol, seed=self.seed, workers=self.workers)


@dataclass(frozen=True, slots=True)
class AscentResult:
    start_index: int
    point: tuple[complex, ...]
    objective: float
    iterations: int
    converged: bool


@dataclass(frozen=True, slots=True)
class AscentSummary:
    best: AscentResult
    starts: int
    converged_count: int
    results: tuple[AscentResult, ...] = ()

    @property
    def converged_fraction(self) -> float:
        return self.converged_count / self.starts


@dataclass(frozen=True, slots=True)
class NormEstimate:
    value: float
    argmax: tuple[complex, ...]
    starts: int
    converged_fraction: float
    seed: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError('value must be >= 0')
        if not 0.0 <= self.converged_fraction <= 1.0:
            raise ValueError('converged_fraction must be in [0, 1]')

    @property
    def log_value(self) -> float:
        return math.log(self.value) if self.value > 0 else -math.inf
