"""Utility modules for the terrain k-gon toolkit."""

from .error_handler import (
    TerrainError,
    TerrainValidationError,
    InvalidPointError,
    TooFewPointsError,
    NonMonotoneError,
    UnequalEndHeightsError,
    DegenerateAreaError,
    BelowBaseError,
    TerrainParseError,
    TerrainIOError,
    InfeasibleConfigError,
    InfeasibleKError,
    UnsupportedMeasureError,
    NoFeasibleTriangleError,
    NoPolygonFoundError,
    map_error_to_exit_code,
)
from .predicates import get_tolerance, tolerance_scope

__all__ = [
    "TerrainError",
    "TerrainValidationError",
    "InvalidPointError",
    "TooFewPointsError",
    "NonMonotoneError",
    "UnequalEndHeightsError",
    "DegenerateAreaError",
    "BelowBaseError",
    "TerrainParseError",
    "TerrainIOError",
    "InfeasibleConfigError",
    "InfeasibleKError",
    "UnsupportedMeasureError",
    "NoFeasibleTriangleError",
    "NoPolygonFoundError",
    "map_error_to_exit_code",
    "get_tolerance",
    "tolerance_scope",
]
