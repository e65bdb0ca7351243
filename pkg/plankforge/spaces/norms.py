from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from plankforge.errors import DimensionMismatchError
from plankforge.polynomials.types import MultiIndex
from .types import SpaceSpec


def lp_norms(points, p: float) -> np.ndarray:
    moduli = np.abs(np.asarray(points))
    if math.isinf(p):
        return moduli.max(axis=-1)
    if p == 1:
        return moduli.sum(axis=-1)
    return np.linalg.norm(moduli, ord=p, axis=-1)


def vector_norm(x, space: SpaceSpec) -> float:
    array = np.asarray(x)
    if array.shape != (space.d,):
        raise DimensionMismatchError(f'point must have {space.d} coordinates, got shape {array.shape}')
    return float(lp_norms(array, space.p))


def dual_norm(coefficients, space: SpaceSpec) -> float:
    """Norm of the functional z -> sum(c_i z_i) on the space, i.e. the l_q norm with 1/p + 1/q = 1."""
    array = np.asarray(coefficients)
    if array.shape != (space.d,):
        raise DimensionMismatchError(f'functional must have {space.d} coefficients, got shape {array.shape}')
    return float(lp_norms(array, space.dual_exponent))


def log_monomial_norm(alpha: MultiIndex | Sequence[int], space: SpaceSpec) -> float:
    if len(alpha) != space.d:
        raise DimensionMismatchError(f'multi-index must have length {space.d}')
    total = sum(alpha)
    if total == 0 or space.is_sup_norm:
        return 0.0
    entropy = math.fsum(a * math.log(a) for a in alpha if a > 0)
    return (entropy - total * math.log(total)) / space.p


def monomial_norm(alpha: MultiIndex | Sequence[int], space: SpaceSpec) -> float:
    return math.exp(log_monomial_norm(alpha, space))
