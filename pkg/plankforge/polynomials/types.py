from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

MultiIndex = tuple[int, ...]


class Field(Enum):
    REAL = 'real'
    COMPLEX = 'complex'


def total_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def graded_lex_key(alpha: MultiIndex) -> tuple[int, tuple[int, ...]]:
    return total_degree(alpha), tuple(-exponent for exponent in alpha)


def _validate_multi_index(alpha: MultiIndex, dim: int) -> None:
    if len(alpha) != dim:
        raise ValueError(f'multi-index {alpha} must have length {dim}')
    if any(not isinstance(exponent, int) or exponent < 0 for exponent in alpha):
        raise ValueError(f'multi-index {alpha} must contain non-negative integers')


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial on K^dim with terms kept in graded-lex order and no stored zeros."""

    dim: int
    field: Field
    terms: tuple[tuple[MultiIndex, complex], ...] = ()

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise ValueError('dim must be > 0')
        previous_key = None
        for alpha, coefficient in self.terms:
            _validate_multi_index(alpha, self.dim)
            if coefficient == 0:
                raise ValueError('terms must not store zero coefficients')
            if self.field is Field.REAL and complex(coefficient).imag != 0:
                raise ValueError('real polynomials must have real coefficients')
            key = graded_lex_key(alpha)
            if previous_key is not None and key <= previous_key:
                raise ValueError('terms must be unique and in graded-lex order')
            previous_key = key

    @classmethod
    def from_terms(
        cls,
        dim: int,
        field: Field,
        terms: Mapping[MultiIndex, complex] | Iterable[tuple[MultiIndex, complex]],
    ) -> Polynomial:
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[MultiIndex, complex] = {}
        for alpha, coefficient in items:
            alpha = tuple(int(exponent) for exponent in alpha)
            merged[alpha] = merged.get(alpha, 0j) + complex(coefficient)

        canonical = []
        for alpha in sorted(merged, key=graded_lex_key):
            coefficient = merged[alpha]
            if field is Field.REAL:
                if coefficient.imag != 0:
                    raise ValueError('real polynomials must have real coefficients')
                coefficient = complex(coefficient.real, 0.0)
            if coefficient != 0:
                canonical.append((alpha, coefficient))
        return cls(dim=dim, field=field, terms=tuple(canonical))

    @classmethod
    def zero(cls, dim: int, field: Field) -> Polynomial:
        return cls(dim=dim, field=field)

    @classmethod
    def constant(cls, value: complex, dim: int, field: Field) -> Polynomial:
        return cls.from_terms(dim, field, {(0,) * dim: value})

    @classmethod
    def monomial(cls, alpha: MultiIndex, field: Field, coefficient: complex = 1.0) -> Polynomial:
        return cls.from_terms(len(alpha), field, {tuple(alpha): coefficient})

    @classmethod
    def coordinate(cls, index: int, dim: int, field: Field) -> Polynomial:
        if not 0 <= index < dim:
            raise ValueError(f'coordinate index must be in [0, {dim})')
        alpha = tuple(1 if position == index else 0 for position in range(dim))
        return cls.monomial(alpha, field)

    @classmethod
    def linear_form(cls, coefficients: Iterable[complex], field: Field) -> Polynomial:
        coefficients = tuple(coefficients)
        dim = len(coefficients)
        terms = {}
        for index, value in enumerate(coefficients):
            terms[tuple(1 if position == index else 0 for position in range(dim))] = value
        return cls.from_terms(dim, field, terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(total_degree(alpha) for alpha, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({total_degree(alpha) for alpha, _ in self.terms}) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, alpha: MultiIndex) -> complex:
        for candidate, value in self.terms:
            if candidate == tuple(alpha):
                return value
        return 0j

    def as_dict(self) -> dict[MultiIndex, complex]:
        return dict(self.terms)

    def coefficient_l1(self) -> float:
        return float(sum(abs(value) for _, value in self.terms))

    @cached_property
    def exponent_matrix(self) -> np.ndarray:
        if not self.terms:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.array([alpha for alpha, _ in self.terms], dtype=np.int64)

    @cached_property
    def coefficient_vector(self) -> np.ndarray:
        values = np.array([value for _, value in self.terms], dtype=complex)
        if self.field is Field.REAL:
            return values.real.copy()
        return values


@dataclass(frozen=True, slots=True)
class LinearFactor:
    coefficients: tuple[complex, complex]
    dual_norm: float


@dataclass(frozen=True, slots=True)
class LinearFactorization:
    scale: float
    factors: tuple[LinearFactor, ...]
    residual: float
    normalized: bool = True
    metadata: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValueError('scale must be > 0')
        if self.residual < 0:
            raise ValueError('residual must be >= 0')

    @property
    def degree(self) -> int:
        return len(self.factors)
