"""Planar primitives and the terrain model."""

from .primitives import (
    Point,
    Segment,
    convex_hull,
    hull_measure,
    in_convex_position,
    is_convex,
    lexicographic_key,
    line_intersection,
    orientation,
    polygon_area,
    polygon_measure,
    polygon_perimeter,
)
from .terrain import (
    Terrain,
    VertexClass,
    VertexKind,
    build_terrain,
    classify_vertices,
    point_in_terrain,
    prolong_chord,
    reflex_indices,
    segment_in_terrain,
    visible,
)

__all__ = [
    "Point",
    "Segment",
    "Terrain",
    "VertexClass",
    "VertexKind",
    "build_terrain",
    "classify_vertices",
    "convex_hull",
    "hull_measure",
    "in_convex_position",
    "is_convex",
    "lexicographic_key",
    "line_intersection",
    "orientation",
    "point_in_terrain",
    "polygon_area",
    "polygon_measure",
    "polygon_perimeter",
    "prolong_chord",
    "reflex_indices",
    "segment_in_terrain",
    "visible",
]
