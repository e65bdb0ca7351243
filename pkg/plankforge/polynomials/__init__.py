from .arithmetic import (
    add,
    evaluate,
    evaluate_many,
    gradient,
    gradient_many,
    homogeneous_component,
    multiply,
    multiply_all,
    partial_derivative,
    power,
    realify_modulus_squared,
    realify_point,
    scale,
)
from .serialization import dumps_polynomial, load_polynomial, load_polynomials, loads_polynomial
from .types import Field, LinearFactor, LinearFactorization, MultiIndex, Polynomial

__all__ = [
    'Field',
    'MultiIndex',
    'Polynomial',
    'LinearFactor',
    'LinearFactorization',
    'evaluate',
    'evaluate_many',
    'gradient',
    'gradient_many',
    'partial_derivative',
    'add',
    'scale',
    'multiply',
    'multiply_all',
    'power',
    'homogeneous_component',
    'realify_modulus_squared',
    'realify_point',
    'dumps_polynomial',
    'loads_polynomial',
    'load_polynomial',
    'load_polynomials',
]
