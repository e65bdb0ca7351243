import math


def chebyshev_T_recurrence(k: int, x: float) -> float:
    if k < 0:
        raise ValueError('k must be >= 0')
    previous, current = 1.0, x
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, 2.0 * x * current - previous
    return current


def chebyshev_T_closed_form(k: int, x: float) -> float:
    if k < 0:
        raise ValueError('k must be >= 0')
    if abs(x) <= 1.0:
        return math.cos(k * math.acos(x))
    value = math.cosh(k * math.acosh(abs(x)))
    return -value if x < 0 and k % 2 else value


def chebyshev_T(k: int, x: float) -> float:
    if abs(x) <= 1.0:
        return chebyshev_T_recurrence(k, x)
    return chebyshev_T_closed_form(k, x)


def log_chebyshev_T(k: int, x: float) -> float:
    """ln T_k(x) for x >= 1 without overflow."""
    if k < 0:
        raise ValueError('k must be >= 0')
    if x < 1.0:
        raise ValueError('log_chebyshev_T requires x >= 1')
    growth = k * math.acosh(x)
    return growth + math.log1p(math.exp(-2.0 * growth)) - math.log(2.0)
