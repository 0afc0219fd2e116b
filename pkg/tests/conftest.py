"""
Shared terrains for the test suite.
"""

import pytest

from src.geometry.terrain import build_terrain
from src.utils.terrain_generator import terrain_batch

RANDOM_SEED = 20240521


@pytest.fixture
def t1():
    """Single peak: the region is the triangle (0,0), (1,2), (2,0)."""
    return build_terrain([(0, 0), (1, 2), (2, 0)])


@pytest.fixture
def t2():
    """Trapezoid with a flat top."""
    return build_terrain([(0, 0), (0.5, 1), (1.5, 1), (2, 0)])


@pytest.fixture
def t3():
    """Two peaks separated by a valley; vertex 2 is reflex."""
    return build_terrain([(0, 0), (1, 3), (2, 0.5), (3, 3), (4, 0)])


@pytest.fixture
def flat_top():
    return build_terrain([(0, 0), (1, 1), (2, 1), (3, 0)])


@pytest.fixture
def random_terrains():
    """Reproducible integer terrains with 4..8 vertices."""
    return list(terrain_batch(RANDOM_SEED, count=5, n_min=4, n_max=8))


ACCEPTANCE_SEED = 20240601


@pytest.fixture(scope="session")
def acceptance_terrains():
    """200 seeded terrains, n in [4, 10], integer coordinates in [0, 20]."""
    return list(terrain_batch(ACCEPTANCE_SEED, count=200, n_min=4, n_max=10))


@pytest.fixture(scope="session")
def small_acceptance_terrains():
    """20 seeded terrains with n in [4, 8] for the k-gon oracle."""
    return list(terrain_batch(ACCEPTANCE_SEED + 1, count=20, n_min=4, n_max=8))
