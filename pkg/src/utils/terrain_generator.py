"""
Seeded random terrains with integer coordinates.
"""

from typing import Optional
import logging

import numpy as np

from ..geometry.terrain import Terrain, build_terrain

logger = logging.getLogger(__name__)


def random_terrain(
    rng: np.random.Generator,
    n: int,
    max_coord: int = 20,
    min_height: int = 1
) -> Terrain:
    """
    Random terrain with n vertices and integer coordinates in [0, max_coord].

    Args:
        rng: numpy random generator (seed it for reproducibility)
        n: Number of chain vertices, 3 <= n <= max_coord + 1
        max_coord: Largest coordinate value
        min_height: Smallest height of an interior vertex

    Returns:
        Terrain whose endpoints lie on the base and whose interior vertices
        have heights in [min_height, max_coord]
    """
    if not 3 <= n <= max_coord + 1:
        raise ValueError(f"n must lie in [3, {max_coord + 1}], got {n}")
    xs = np.sort(rng.choice(max_coord + 1, size=n, replace=False))
    ys = rng.integers(min_height, max_coord, size=n, endpoint=True)
    ys[0] = ys[-1] = 0
    return build_terrain([(float(x), float(y)) for x, y in zip(xs, ys)])


def terrain_batch(seed: Optional[int], count: int, n_min: int = 4, n_max: int = 10, max_coord: int = 20):
    """Yield ``count`` reproducible random terrains with n in [n_min, n_max]."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max, endpoint=True))
        yield random_terrain(rng, n, max_coord)
