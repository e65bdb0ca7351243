from __future__ import annotations

from dataclasses import dataclass, field
import dataclasses
from typing import Protocol

from plankforge.bounds.types import BoundKind
from plankforge.planks.types import Regime, WitnessOptions
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.types import NormOptions, SpaceSpec


class CommandRequest(Protocol):
    pass


@dataclass(frozen=True, slots=True)
class NormRequest:
    polynomials: tuple[Polynomial, ...]
    space: SpaceSpec
    options: NormOptions = field(default_factory=NormOptions)

    def __post_init__(self) -> None:
        if not self.polynomials:
            raise ValueError('polynomials must not be empty')


@dataclass(frozen=True, slots=True)
class ConstantValueRequest:
    kind: BoundKind
    degrees: tuple[int, ...]
    field: Field = Field.COMPLEX
    d: int | None = None
    p: float | None = None

    def __post_init__(self) -> None:
        if not self.degrees:
            raise ValueError('degrees must not be empty')


@dataclass(frozen=True, slots=True)
class ConstantSweepRequest:
    kinds: tuple[BoundKind, ...]
    field: Field
    d_values: tuple[int, ...]
    n_values: tuple[int, ...]
    k: int
    p: float | None = None

    def __post_init__(self) -> None:
        if not self.kinds:
            raise ValueError('kinds must not be empty')
        if not self.d_values or not self.n_values:
            raise ValueError('d and n ranges must not be empty')
        if self.k < 1:
            raise ValueError('k must be >= 1')


@dataclass(frozen=True, slots=True)
class BoundComparisonRequest:
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1 or self.d < 1:
            raise ValueError('n, k and d must be >= 1')


@dataclass(frozen=True, slots=True)
class HilbertAuditRequest:
    d: int = 1
    field: Field = Field.REAL

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError('d must be >= 1')


@dataclass(frozen=True, slots=True)
class MnEstimateRequest:
    space: SpaceSpec
    n: int
    degree_cap: int = 2
    budget: int = 64
    seed: int = 0
    degrees: tuple[int, ...] | None = None
    seed_tuples: tuple[tuple[Polynomial, ...], ...] = ()
    options: NormOptions = field(default_factory=NormOptions)
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError('n must be >= 1')
        if self.budget < 0:
            raise ValueError('budget must be >= 0')


@dataclass(frozen=True, slots=True)
class PolarizationRequest:
    space: SpaceSpec
    k: int
    budget: int = 64
    seed: int = 0
    binary_forms: tuple[Polynomial, ...] = ()
    options: NormOptions = field(default_factory=NormOptions)
    workers: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError('k must be >= 1')
        if self.budget < 0:
            raise ValueError('budget must be >= 0')


@dataclass(frozen=True, slots=True)
class SublevelRequest:
    polynomial: Polynomial
    space: SpaceSpec
    t: float
    samples: int = 100_000
    seed: int = 0
    normalize: bool = False
    options: NormOptions = field(default_factory=NormOptions)

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError('samples must be >= 1')


@dataclass(frozen=True, slots=True)
class SublevelIntegralRequest:
    polynomial: Polynomial
    space: SpaceSpec
    samples: int = 100_000
    t_max: float = 40.0
    seed: int = 0
    normalize: bool = False
    options: NormOptions = field(default_factory=NormOptions)

    def __post_init__(self) -> None:
        if self.samples < 2:
            raise ValueError('samples must be >= 2')


@dataclass(frozen=True, slots=True)
class PlankRequest:
    polynomials: tuple[Polynomial, ...]
    space: SpaceSpec
    radii: tuple[float, ...]
    regime: Regime
    K: float | None = None
    options: WitnessOptions = field(default_factory=WitnessOptions)

    def __post_init__(self) -> None:
        if len(self.radii) != len(self.polynomials):
            raise ValueError(f'{len(self.polynomials)} polynomials need as many radii, got {len(self.radii)}')


@dataclass(frozen=True, slots=True)
class ExtremalFamilyRequest:
    d: int
    n: int
    k: int = 1
    field: Field = Field.REAL
    cross_check: bool = True
    options: NormOptions = dataclasses.field(default_factory=NormOptions)


@dataclass(frozen=True, slots=True)
class SharpnessRequest:
    kind: BoundKind
    n: int

    def __post_init__(self) -> None:
        if self.kind not in (BoundKind.BST, BoundKind.HILBERT_COMPLEX):
            raise ValueError('sharpness checks exist for eq2 and eq3 only')


@dataclass(frozen=True, slots=True)
class VerifyInequalityRequest:
    polynomials: tuple[Polynomial, ...]
    space: SpaceSpec
    kind: BoundKind
    rtol: float = 1e-6
    options: NormOptions = field(default_factory=NormOptions)

    def __post_init__(self) -> None:
        if not 0 <= self.rtol < 1:
            raise ValueError('rtol must be in [0, 1)')
