from __future__ import annotations

import math

from .formulas import (
    BoundFormula,
    BstFormula,
    FiniteDimFormula,
    HilbertComplexFormula,
    HilbertFiniteDerivedFormula,
    HilbertFiniteFormula,
    HilbertRealFormula,
    LpFormula,
)
from .types import BoundKind, BoundSpec


class BoundRegistry:
    def __init__(self) -> None:
        self._by_kind: dict[BoundKind, BoundFormula] = {}

    def register(self, formula: BoundFormula) -> None:
        if formula.kind in self._by_kind:
            raise ValueError(f'Formula already registered for {formula.kind.value}')
        self._by_kind[formula.kind] = formula

    def get(self, kind: BoundKind) -> BoundFormula:
        try:
            return self._by_kind[kind]
        except KeyError as exc:
            raise KeyError(f'No formula registered for {kind.value}') from exc

    def for_spec(self, spec: BoundSpec) -> BoundFormula:
        return self.get(spec.kind)

    @property
    def kinds(self) -> tuple[BoundKind, ...]:
        return tuple(self._by_kind)


def default_registry() -> BoundRegistry:
    registry = BoundRegistry()
    for formula in (
        BstFormula(),
        HilbertComplexFormula(),
        HilbertRealFormula(),
        LpFormula(),
        FiniteDimFormula(),
        HilbertFiniteFormula(),
        HilbertFiniteDerivedFormula(),
    ):
        registry.register(formula)
    return registry


def bound_log_value(spec: BoundSpec, registry: BoundRegistry | None = None) -> float:
    registry = registry or default_registry()
    return registry.for_spec(spec).log_value(spec)


def value_if_finite(log_value: float) -> float | None:
    try:
        value = math.exp(log_value)
    except OverflowError:
        return None
    return value if math.isfinite(value) else None
