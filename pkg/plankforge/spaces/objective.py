from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from plankforge.errors import DimensionMismatchError
from plankforge.polynomials.arithmetic import evaluate_many, gradient_many
from plankforge.polynomials.types import Polynomial


class LogProductObjective:
    """F(z) = sum_i w_i ln|P_i(z)|, the log-modulus of prod P_i^{w_i} without expanding the product."""

    def __init__(self, polynomials: Sequence[Polynomial], weights: Sequence[float] | None = None) -> None:
        polynomials = tuple(polynomials)
        if not polynomials:
            raise ValueError('polynomials must not be empty')
        dims = {polynomial.dim for polynomial in polynomials}
        if len(dims) != 1:
            raise DimensionMismatchError(f'polynomials must share a dimension, got {sorted(dims)}')
        if any(polynomial.is_zero for polynomial in polynomials):
            raise ValueError('polynomials must be nonzero')

        weights = tuple(float(weight) for weight in weights) if weights is not None else (1.0,) * len(polynomials)
        if len(weights) != len(polynomials):
            raise ValueError('weights must match polynomials')
        if any(weight < 0 for weight in weights):
            raise ValueError('weights must be >= 0')

        self._polynomials = polynomials
        self._weights = np.array(weights)
        self.dim = polynomials[0].dim

    @property
    def polynomials(self) -> tuple[Polynomial, ...]:
        return self._polynomials

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def is_homogeneous(self) -> bool:
        return all(polynomial.is_homogeneous for polynomial in self._polynomials)

    def log_moduli_many(self, points) -> np.ndarray:
        values = np.stack([evaluate_many(polynomial, points) for polynomial in self._polynomials], axis=1)
        with np.errstate(divide='ignore'):
            return np.log(np.abs(values))

    def log_moduli(self, point) -> np.ndarray:
        return self.log_moduli_many(point)[0]

    def value_many(self, points) -> np.ndarray:
        log_moduli = self.log_moduli_many(points)
        active = self._weights > 0
        return log_moduli[:, active] @ self._weights[active]

    def value(self, point) -> float:
        return float(self.value_many(point)[0])

    def direction(self, point) -> np.ndarray:
        """Ascent direction; for complex points the vector x + iy encodes the gradient in (Re z, Im z)."""
        array = np.asarray(point)
        total = np.zeros(self.dim, dtype=array.dtype if np.iscomplexobj(array) else float)
        for polynomial, weight in zip(self._polynomials, self._weights):
            if weight == 0:
                continue
            value = evaluate_many(polynomial, array)[0]
            if value == 0:
                return np.zeros_like(total)
            logarithmic = gradient_many(polynomial, array)[0] / value
            total = total + weight * (np.conj(logarithmic) if np.iscomplexobj(logarithmic) else logarithmic)
        return total
