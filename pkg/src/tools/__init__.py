"""Async entry points returning ResultRecord dictionaries."""

from .diameter_tools import diameter_result
from .triangle_tools import triangle_result
from .kgon_tools import grid_for, kgon_result, make_config

__all__ = [
    "diameter_result",
    "triangle_result",
    "kgon_result",
    "make_config",
    "grid_for",
]
