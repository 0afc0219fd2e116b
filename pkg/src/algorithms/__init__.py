"""Terrain algorithms: diameter, exact triangle, k-gon approximation and oracles."""

from .diameter import Chord, candidate_chords, compute_diameter
from .triangle_exact import (
    CandidateTriangle,
    TriangleCase,
    base_case_candidates,
    largest_perimeter_triangle,
    vertex_on_base_candidates,
)
from .grid import BoundaryInterval, CellLevel, CellSide, GridCell, build_grid, extract_intervals
from .visibility import (
    VisibilityIndex,
    VisibilityRange,
    build_visibility_index,
    visibility_ranges,
    visible_interval_pairs,
)
from .fptas_kgon import (
    ConvexPolygon,
    approximate_largest_kgon,
    area_epsilon,
    best_polygon_on_intervals,
    seed_scale,
    tiny_subintervals,
)
from .oracle import SampleSet, oracle_best_kgon, oracle_contains_segment, oracle_diameter, solve_oracle_kgon

__all__ = [
    "BoundaryInterval",
    "CandidateTriangle",
    "CellLevel",
    "CellSide",
    "Chord",
    "ConvexPolygon",
    "GridCell",
    "SampleSet",
    "TriangleCase",
    "VisibilityIndex",
    "VisibilityRange",
    "approximate_largest_kgon",
    "area_epsilon",
    "base_case_candidates",
    "best_polygon_on_intervals",
    "build_grid",
    "build_visibility_index",
    "candidate_chords",
    "compute_diameter",
    "extract_intervals",
    "largest_perimeter_triangle",
    "oracle_best_kgon",
    "oracle_contains_segment",
    "oracle_diameter",
    "seed_scale",
    "solve_oracle_kgon",
    "tiny_subintervals",
    "vertex_on_base_candidates",
    "visibility_ranges",
    "visible_interval_pairs",
]
