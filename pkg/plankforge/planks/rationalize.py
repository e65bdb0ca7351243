from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from plankforge.errors import RationalizationError


def largest_remainder(t: np.ndarray, p: int) -> np.ndarray:
    """Integers q_i >= 1 summing to p with q_i / p close to t_i."""
    scaled = t * p
    q = np.maximum(np.floor(scaled).astype(np.int64), 1)
    remainders = scaled - q
    excess = int(q.sum()) - p
    if excess < 0:
        for index in sorted(range(t.size), key=lambda i: (-remainders[i], i))[:-excess]:
            q[index] += 1
    while excess > 0:
        reducible = [i for i in range(t.size) if q[i] > 1]
        index = min(reducible, key=lambda i: (remainders[i], i))
        q[index] -= 1
        remainders[index] += 1
        excess -= 1
    return q


def rationalize_lemma5(t: Sequence[float], k: Sequence[int], r_cap: int) -> tuple[tuple[float, ...], tuple[int, ...]]:
    """Rational weights s_i = k_i r_i / sum k_j r_j close to t with sum k_i r_i <= r_cap and s_i >= t_i / 2."""
    t = np.asarray(t, dtype=float)
    k = tuple(int(degree) for degree in k)
    n = t.size
    if n == 0 or len(k) != n:
        raise ValueError('t and k must be non-empty and of equal length')
    if np.any(t <= 0) or not math.isclose(math.fsum(t), 1.0, rel_tol=1e-9):
        raise ValueError('t must be positive and sum to 1')
    if any(degree < 1 for degree in k):
        raise ValueError('k must be >= 1')
    M = math.prod(k)
    if r_cap < n * M:
        raise RationalizationError(f'r_cap must be >= n * prod(k) = {n * M}, got {r_cap}')

    best: tuple[float, int, np.ndarray] | None = None
    for p in range(n, r_cap // M + 1):
        q = largest_remainder(t, p)
        approximation = q / p
        if np.any(approximation < t / 2):
            continue
        error = float(np.max(np.abs(t - approximation)))
        if best is None or error < best[0]:
            best = (error, p, q)
        if error == 0:
            break

    if best is None:
        raise RationalizationError(f'r_cap={r_cap} cannot keep every s_i >= t_i / 2')

    _, p, q = best
    r = [int(q_i) * M // degree for q_i, degree in zip(q, k)]
    divisor = math.gcd(*r)
    r = tuple(r_i // divisor for r_i in r)
    total = sum(degree * r_i for degree, r_i in zip(k, r))
    s = tuple(degree * r_i / total for degree, r_i in zip(k, r))
    return s, r
