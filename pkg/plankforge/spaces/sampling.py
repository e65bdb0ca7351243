from __future__ import annotations

import numpy as np

from .norms import lp_norms
from .types import SpaceSpec


def _sup_ball(space: SpaceSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    if not space.is_complex:
        return rng.uniform(-1.0, 1.0, size=(count, space.d))
    radii = np.sqrt(rng.uniform(0.0, 1.0, size=(count, space.d)))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(count, space.d))
    return radii * np.exp(1j * phases)


def _generalized_gaussian(space: SpaceSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    # density proportional to exp(-sum |x_i|^p) on R^d or C^d
    p = space.p
    if not space.is_complex:
        moduli = rng.gamma(1.0 / p, size=(count, space.d)) ** (1.0 / p)
        signs = rng.choice(np.array([-1.0, 1.0]), size=(count, space.d))
        return signs * moduli
    moduli = rng.gamma(2.0 / p, size=(count, space.d)) ** (1.0 / p)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(count, space.d))
    return moduli * np.exp(1j * phases)


def sample_ball(
    space: SpaceSpec,
    count: int,
    seed: int = 0,
    rng: np.random.Generator | None = None,
) -> np.ndarray:
    if count < 1:
        raise ValueError('count must be >= 1')
    rng = rng if rng is not None else np.random.default_rng(seed)

    if space.is_sup_norm:
        return _sup_ball(space, count, rng)

    gaussian = _generalized_gaussian(space, count, rng)
    radial = rng.exponential(1.0, size=count)
    scale = (lp_norms(gaussian, space.p) ** space.p + radial) ** (1.0 / space.p)
    return gaussian / scale[:, np.newaxis]
