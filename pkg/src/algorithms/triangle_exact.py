"""
Exact largest-perimeter triangle inside a terrain.

An optimal triangle either has a side on the base or a vertex on it.
Side-on-base optima have either their apex on the chain (legs reaching as
far as the apex can see along the base) or both legs on maximal chords.
Vertex-on-base optima use a maximal chord as the opposite side, with the
base vertex pushed to the far end of its feasible range.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple
import logging
import math

import numpy as np
from scipy.optimize import minimize_scalar

from .diameter import Chord, candidate_chords
from ..config import Config
from ..geometry.primitives import (
    Point,
    lexicographic_key,
    line_intersection,
    orientation,
    polygon_area,
    polygon_perimeter,
)
from ..geometry.terrain import Terrain, visible
from ..utils.error_handler import NoFeasibleTriangleError
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


class TriangleCase(str, Enum):
    APEX_ON_CHAIN = "base-on-B-apex-on-chain"
    SUPPORTED_LEGS = "base-on-B-two-supported-legs"
    VERTEX_ON_BASE = "vertex-on-B"

    @property
    def has_base_side(self) -> bool:
        return self is not TriangleCase.VERTEX_ON_BASE


@dataclass(frozen=True)
class CandidateTriangle:
    """
    Feasible triangle with its provenance.

    Attributes:
        vertices: Counter-clockwise vertices
        case_tag: Structural family the triangle came from
        perimeter: Sum of side lengths
        leg_angles: Internal base angles (alpha, beta) for side-on-base cases
        supports: Chain vertex indices binding the legs or the chord
    """
    vertices: Tuple[Point, Point, Point]
    case_tag: TriangleCase
    perimeter: float
    leg_angles: Optional[Tuple[float, float]] = None
    supports: Tuple[int, ...] = ()

    @property
    def area(self) -> float:
        return polygon_area(self.vertices)


def _make_triangle(
    T: Terrain,
    verts: Sequence[Point],
    case_tag: TriangleCase,
    supports: Tuple[int, ...],
    leg_angles: Optional[Tuple[float, float]] = None
) -> Optional[CandidateTriangle]:
    """Orient, validate and wrap a triangle; None if degenerate or outside."""
    a, b, c = verts
    turn = orientation(a, b, c)
    if turn == 0 or polygon_area(verts) <= get_tolerance():
        return None
    if turn < 0:
        b, c = c, b
    if not (visible(T, a, b) and visible(T, b, c) and visible(T, c, a)):
        return None
    return CandidateTriangle(
        vertices=(a, b, c),
        case_tag=case_tag,
        perimeter=polygon_perimeter((a, b, c)),
        leg_angles=leg_angles,
        supports=supports
    )


def _leg_angles(left: Point, right: Point, apex: Point) -> Tuple[float, float]:
    return (
        math.atan2(apex.y, apex.x - left.x),
        math.atan2(apex.y, right.x - apex.x)
    )


# =============================================================================
# Side on base, apex on the chain
# =============================================================================

def _reach_arrays(T: Terrain, tx: np.ndarray, ty: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised ``Terrain.reach_on_base`` (extents only) for many apexes."""
    vx = T.xs_array[np.newaxis, :]
    vy = T.ys_array[np.newaxis, :]
    px = tx[:, np.newaxis]
    py = ty[:, np.newaxis]
    below = vy < py
    with np.errstate(divide="ignore", invalid="ignore"):
        c = (py * vx - vy * px) / (py - vy)
    left = np.where(below & (vx < px), c, -np.inf).max(axis=1)
    right = np.where(below & (vx > px), c, np.inf).min(axis=1)
    return np.maximum(left, T.x_min), np.minimum(right, T.x_max)


def _apex_perimeter(T: Terrain, apex: Point) -> float:
    if apex.y <= get_tolerance():
        return 0.0
    left, right, _, _ = T.reach_on_base(apex)
    return (right - left) + math.hypot(apex.x - left, apex.y) + math.hypot(right - apex.x, apex.y)


def _apex_candidate(T: Terrain, apex: Point) -> Optional[CandidateTriangle]:
    if apex.y <= get_tolerance():
        return None
    left_x, right_x, left_support, right_support = T.reach_on_base(apex)
    left, right = Point(left_x, 0.0), Point(right_x, 0.0)
    return _make_triangle(
        T,
        (left, right, apex),
        TriangleCase.APEX_ON_CHAIN,
        supports=(left_support, right_support),
        leg_angles=_leg_angles(left, right, apex)
    )


def _edge_apex_candidates(T: Terrain, edge_index: int) -> List[CandidateTriangle]:
    """
    Scan apex positions along one chain edge and refine every local maximum
    of the perimeter.
    """
    a, b = T.chain[edge_index], T.chain[edge_index + 1]
    steps = max(1, int(math.ceil(1.0 / Config.APEX_SCAN_STEP)))
    s = np.linspace(0.0, 1.0, steps + 1)
    tx = a.x + s * (b.x - a.x)
    ty = a.y + s * (b.y - a.y)
    left, right = _reach_arrays(T, tx, ty)
    per = (right - left) + np.hypot(tx - left, ty) + np.hypot(right - tx, ty)
    per = np.where(ty > get_tolerance(), per, 0.0)
    if not np.any(per > 0.0):
        return []

    prev = np.concatenate(([-np.inf], per[:-1]))
    nxt = np.concatenate((per[1:], [-np.inf]))
    peaks = np.flatnonzero((per >= prev) & (per > nxt) & (per > 0.0))

    def apex_at(u: float) -> Point:
        return Point(a.x + u * (b.x - a.x), a.y + u * (b.y - a.y))

    found: List[CandidateTriangle] = []
    for i in peaks:
        best_s = float(s[i])
        if 0 < i < steps:
            res = minimize_scalar(
                lambda u: -_apex_perimeter(T, apex_at(u)),
                bounds=(float(s[i - 1]), float(s[i + 1])),
                method="bounded",
                options={"xatol": Config.APEX_REFINE_TOLERANCE}
            )
            if res.success and -res.fun > per[i]:
                best_s = float(res.x)
        cand = _apex_candidate(T, apex_at(best_s))
        if cand is not None:
            found.append(cand)
    return found


def apex_on_chain_candidates(T: Terrain) -> List[CandidateTriangle]:
    """Triangles with a side on the base and apex anywhere on the chain."""
    found: List[CandidateTriangle] = []
    for i in range(T.n - 1):
        found.extend(_edge_apex_candidates(T, i))
    for v in T.chain[1:-1]:
        cand = _apex_candidate(T, v)
        if cand is not None:
            found.append(cand)
    return found


# =============================================================================
# Side on base, both legs on maximal chords
# =============================================================================

def _rising_chords(chords: Sequence[Chord]) -> List[Chord]:
    """Positive-slope chords running from the base up to the chain."""
    tol = get_tolerance()
    return [
        c for c in chords
        if math.isfinite(c.slope) and c.slope > 0 and c.seg.a.y <= tol and c.seg.b.y > tol
    ]


def _falling_chords(chords: Sequence[Chord]) -> List[Chord]:
    """Negative-slope chords running from the chain down to the base."""
    tol = get_tolerance()
    return [
        c for c in chords
        if math.isfinite(c.slope) and c.slope < 0 and c.seg.b.y <= tol and c.seg.a.y > tol
    ]


def supported_leg_candidates(T: Terrain, chords: Sequence[Chord]) -> List[CandidateTriangle]:
    """Intersect every rising chord with every falling chord."""
    tol = get_tolerance()
    found: List[CandidateTriangle] = []
    for rising in _rising_chords(chords):
        for falling in _falling_chords(chords):
            params = line_intersection(rising.seg.a, rising.seg.b, falling.seg.a, falling.seg.b)
            if params is None:
                continue
            t, u = params
            if not (-tol <= t <= 1 + tol and -tol <= u <= 1 + tol):
                continue
            apex = rising.seg.point_at(min(max(t, 0.0), 1.0))
            left, right = rising.seg.a, falling.seg.b
            if apex.y <= tol or left.x >= right.x - tol:
                continue
            cand = _make_triangle(
                T,
                (Point(left.x, 0.0), Point(right.x, 0.0), apex),
                TriangleCase.SUPPORTED_LEGS,
                supports=rising.supports + falling.supports,
                leg_angles=_leg_angles(left, right, apex)
            )
            if cand is not None:
                found.append(cand)
    return found


def base_case_candidates(T: Terrain, chords: Optional[Sequence[Chord]] = None) -> List[CandidateTriangle]:
    """
    Candidate triangles with one side on the base.

    Args:
        T: Validated terrain
        chords: Precomputed ``candidate_chords(T)``

    Returns:
        Apex-on-chain and supported-legs candidates
    """
    if chords is None:
        chords = candidate_chords(T)
    apex = apex_on_chain_candidates(T)
    legs = supported_leg_candidates(T, chords)
    logger.debug(f"Base-side candidates: {len(apex)} apex-on-chain, {len(legs)} supported-legs")
    return apex + legs


# =============================================================================
# One vertex on base
# =============================================================================

def vertex_on_base_candidates(T: Terrain, chords: Optional[Sequence[Chord]] = None) -> List[CandidateTriangle]:
    """
    For each chord strictly above the base, the triangles with the third
    vertex at the leftmost and rightmost base points seeing both chord ends.
    """
    if chords is None:
        chords = candidate_chords(T)
    tol = get_tolerance()
    found: List[CandidateTriangle] = []
    for chord in chords:
        a, b = chord.seg.a, chord.seg.b
        if a.y <= tol or b.y <= tol:
            continue
        la, ra, sla, sra = T.reach_on_base(a)
        lb, rb, slb, srb = T.reach_on_base(b)
        lo, hi = max(la, lb), min(ra, rb)
        if lo > hi + tol:
            continue
        lo_support = sla if la >= lb else slb
        hi_support = sra if ra <= rb else srb
        extremes = [(lo, lo_support)]
        if hi - lo > tol:
            extremes.append((hi, hi_support))
        for cx, support in extremes:
            cand = _make_triangle(
                T,
                (Point(cx, 0.0), a, b),
                TriangleCase.VERTEX_ON_BASE,
                supports=chord.supports + (support,)
            )
            if cand is not None:
                found.append(cand)
    logger.debug(f"Vertex-on-base candidates: {len(found)}")
    return found


def select_best_triangle(candidates: Sequence[CandidateTriangle]) -> CandidateTriangle:
    """Max perimeter; ties go to the lexicographically smallest vertex list."""
    if not candidates:
        raise NoFeasibleTriangleError()
    tol = get_tolerance()
    best = candidates[0]
    for cand in candidates[1:]:
        if cand.perimeter > best.perimeter + tol:
            best = cand
        elif (abs(cand.perimeter - best.perimeter) <= tol
              and lexicographic_key(cand.vertices) < lexicographic_key(best.vertices)):
            best = cand
    return best


def largest_perimeter_triangle(T: Terrain) -> CandidateTriangle:
    """
    Exact largest-perimeter triangle inside T.

    Raises:
        NoFeasibleTriangleError: if every candidate is degenerate
    """
    chords = candidate_chords(T)
    candidates = base_case_candidates(T, chords) + vertex_on_base_candidates(T, chords)
    best = select_best_triangle(candidates)
    logger.info(
        f"Largest perimeter triangle {best.perimeter:.9f} ({best.case_tag.value}) "
        f"from {len(candidates)} candidates"
    )
    return best
