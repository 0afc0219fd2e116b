"""Pydantic schemas for the terrain k-gon toolkit."""

from .geometry_schemas import (
    ApproxConfig,
    ConfigEcho,
    ResultRecord,
    TerrainDocument,
)

__all__ = [
    "ApproxConfig",
    "ConfigEcho",
    "ResultRecord",
    "TerrainDocument",
]
