import math

from scipy.special import gammaln


def log_gamma(x: float) -> float:
    if x <= 0:
        raise ValueError('log_gamma requires x > 0')
    return float(gammaln(x))


def harmonic(d: int) -> float:
    if d < 1:
        raise ValueError('harmonic requires d >= 1')
    return math.fsum(1.0 / k for k in range(1, d + 1))
