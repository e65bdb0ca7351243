from __future__ import annotations

import math
from dataclasses import dataclass

from plankforge.errors import FeasibilityError, InadmissibleParametersError
from plankforge.polynomials.types import Field
from plankforge.tolerances import Tolerances
from .types import PlankInstance, Regime


@dataclass(frozen=True, slots=True)
class GateCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs * (1.0 + Tolerances.CONSTRAINT_SURFACE)


def weight_lemma_gate(n: int) -> float:
    """Largest admissible sum of the targets b_i for n weights."""
    return math.exp(-(n - 1) * math.log(n))


def k_constant_ceiling(n: int) -> float:
    return (n * math.e ** 2) ** (-1.0 / n)


def finite_dim_constant(d: int, field: Field) -> float:
    constant = 2.0 if field is Field.COMPLEX else 1.0
    return 1.0 / (constant * 4 * math.e * d)


def radius_exponent(instance: PlankInstance) -> float:
    return instance.space.p if instance.regime is Regime.LP else 1.0


def resolve_K(instance: PlankInstance) -> float:
    if instance.regime is Regime.FINITE_DIM:
        return finite_dim_constant(instance.space.d, instance.space.field)
    if instance.regime is not Regime.K_CUSTOM:
        raise InadmissibleParametersError(f'regime {instance.regime.value} has no constant K')
    if instance.K is None:
        raise InadmissibleParametersError('k-custom regime requires K')
    ceiling = k_constant_ceiling(instance.n)
    if not instance.K < ceiling:
        raise InadmissibleParametersError(f'K must be < (n e^2)^(-1/n) = {ceiling!r}, got {instance.K!r}')
    return instance.K


def _check_admissible(instance: PlankInstance) -> None:
    space = instance.space
    if instance.regime is Regime.BST and not space.is_complex:
        raise InadmissibleParametersError('bst regime requires a complex space')
    if instance.regime is Regime.LP:
        if not space.is_complex:
            raise InadmissibleParametersError('lp regime requires a complex space')
        if not 1 <= space.p <= 2:
            raise InadmissibleParametersError(f'lp regime requires p in [1, 2], got {space.p!r}')
        if not all(polynomial.is_homogeneous for polynomial in instance.polynomials):
            raise InadmissibleParametersError('lp regime requires homogeneous polynomials')


def check_gate(instance: PlankInstance) -> GateCheck:
    _check_admissible(instance)
    if instance.regime.uses_weight_lemma:
        exponent = radius_exponent(instance)
        lhs = math.fsum(radius ** exponent for radius in instance.radii)
        name = 'sum a_i' if exponent == 1 else f'sum a_i^{exponent:g}'
        return GateCheck(f'{name} <= 1/n^(n-1)', lhs, weight_lemma_gate(instance.n))

    K = resolve_K(instance)
    return GateCheck('sum a_i <= n K^n', math.fsum(instance.radii), instance.n * K ** instance.n)


def enforce_gate(instance: PlankInstance) -> GateCheck:
    gate = check_gate(instance)
    if not gate.passed:
        raise FeasibilityError(gate.name, gate.lhs, gate.rhs)
    return gate
