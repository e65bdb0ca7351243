from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Sequence

from plankforge.errors import InadmissibleParametersError
from plankforge.polynomials.types import Field, Polynomial
from plankforge.spaces.types import SpaceSpec
from .special import harmonic, log_gamma
from .types import BoundKind, BoundSpec

logger = logging.getLogger(__name__)

LOG_TWO = math.log(2.0)
LOG_FOUR = math.log(4.0)


def field_constant(field: Field) -> int:
    return 2 if field is Field.COMPLEX else 1


def log_bst(degrees: Sequence[int]) -> float:
    total = sum(degrees)
    return total * math.log(total) - math.fsum(k * math.log(k) for k in degrees)


class BoundFormula(ABC):
    """Log of the constant M in prod ||P_i|| <= M ||prod P_i||, with the hypotheses under which it holds."""

    kind: BoundKind
    fields: frozenset[Field] = frozenset(Field)
    requires_homogeneous: bool = False
    requires_d: bool = False

    def validate(self, spec: BoundSpec) -> None:
        if spec.kind is not self.kind:
            raise InadmissibleParametersError(f'{self.kind.value} cannot evaluate a {spec.kind.value} spec')
        if self.requires_d and spec.d is None:
            raise InadmissibleParametersError(f'{self.kind.value} requires d')

    def check_space(self, space: SpaceSpec) -> None:
        if space.field not in self.fields:
            raise InadmissibleParametersError(f'{self.kind.value} does not apply to {space.field.value} spaces')

    def check_polynomials(self, polynomials: Sequence[Polynomial]) -> None:
        if self.requires_homogeneous and not all(polynomial.is_homogeneous for polynomial in polynomials):
            raise InadmissibleParametersError(f'{self.kind.value} requires homogeneous polynomials')

    def spec_for(self, space: SpaceSpec, degrees: Sequence[int]) -> BoundSpec:
        return BoundSpec(kind=self.kind, degrees=tuple(degrees), field=space.field, d=space.d, p=space.p)

    @abstractmethod
    def log_value(self, spec: BoundSpec) -> float:
        raise NotImplementedError


class _HilbertSpaceFormula(BoundFormula):
    def check_space(self, space: SpaceSpec) -> None:
        super().check_space(space)
        if space.p != 2:
            raise InadmissibleParametersError(f'{self.kind.value} requires p = 2')


class BstFormula(BoundFormula):
    kind = BoundKind.BST
    fields = frozenset({Field.COMPLEX})

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        return log_bst(spec.degrees)


class HilbertComplexFormula(_HilbertSpaceFormula):
    kind = BoundKind.HILBERT_COMPLEX
    fields = frozenset({Field.COMPLEX})
    requires_homogeneous = True

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        return 0.5 * log_bst(spec.degrees)


class HilbertRealFormula(_HilbertSpaceFormula):
    kind = BoundKind.HILBERT_REAL
    fields = frozenset({Field.REAL})
    requires_homogeneous = True
    requires_d = True

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        total = spec.total_degree
        half_d = spec.d / 2.0
        factorials = math.fsum(log_gamma(k + 1) for k in spec.degrees)
        return 0.5 * (total * LOG_TWO + log_gamma(total + half_d) - log_gamma(half_d) - factorials)


class LpFormula(BoundFormula):
    kind = BoundKind.LP
    fields = frozenset({Field.COMPLEX})
    requires_homogeneous = True

    def validate(self, spec: BoundSpec) -> None:
        super().validate(spec)
        if spec.p is None or not 1 <= spec.p <= 2:
            raise InadmissibleParametersError('eq5 requires p in [1, 2]')

    def check_space(self, space: SpaceSpec) -> None:
        super().check_space(space)
        if not 1 <= space.p <= 2:
            raise InadmissibleParametersError('eq5 requires p in [1, 2]')

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        return log_bst(spec.degrees) / spec.p


class FiniteDimFormula(BoundFormula):
    kind = BoundKind.FINITE_DIM
    requires_d = True

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        constant = field_constant(spec.field)
        return spec.total_degree * math.log(constant * 4 * math.e * spec.d) - (spec.n / constant) * LOG_TWO


class HilbertFiniteFormula(_HilbertSpaceFormula):
    """The finite-dimensional Hilbert constant in its stated form, (e^{H_{dC}} / 4)^{sum k_i}."""

    kind = BoundKind.HILBERT_FINITE
    requires_homogeneous = True
    requires_d = True

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        logger.warning('prop12 is the as-stated constant and drops below 1 in small dimensions; '
                       'prefer prop12-derived')
        return spec.total_degree * (harmonic(spec.d * field_constant(spec.field)) - LOG_FOUR)


class HilbertFiniteDerivedFormula(_HilbertSpaceFormula):
    """(4 e^{H_{dC}})^{sum k_i}, the constant obtained from the homogeneous sublevel integral bound."""

    kind = BoundKind.HILBERT_FINITE_DERIVED
    requires_homogeneous = True
    requires_d = True

    def log_value(self, spec: BoundSpec) -> float:
        self.validate(spec)
        return spec.total_degree * (LOG_FOUR + harmonic(spec.d * field_constant(spec.field)))
