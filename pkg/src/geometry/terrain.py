"""
Terrain model and containment queries.

A terrain is an x-monotone chain whose first and last vertices share a
height; the region of interest is the closed area between the chain and
the horizontal base joining its endpoints. After construction the base
always lies on y = 0.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import List, Optional, Sequence, Tuple, Union
import logging
import math

import numpy as np

from .primitives import Point, Segment, orientation, polygon_area
from ..utils.error_handler import (
    BelowBaseError,
    DegenerateAreaError,
    NonMonotoneError,
    TooFewPointsError,
    UnequalEndHeightsError,
)
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)

PointLike = Union[Point, Sequence[float]]


class VertexKind(str, Enum):
    CONVEX = "convex"
    REFLEX = "reflex"
    ENDPOINT = "endpoint"


@dataclass(frozen=True)
class VertexClass:
    index: int
    kind: VertexKind


@dataclass(frozen=True)
class Terrain:
    """
    Validated terrain. Build instances with ``build_terrain``.

    Attributes:
        chain: Chain vertices, left to right, base on y = 0
        pinched: Indices of interior vertices lying on the base
    """
    chain: Tuple[Point, ...]
    pinched: Tuple[int, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.chain)

    @cached_property
    def xs(self) -> Tuple[float, ...]:
        return tuple(p.x for p in self.chain)

    @cached_property
    def ys(self) -> Tuple[float, ...]:
        return tuple(p.y for p in self.chain)

    @cached_property
    def xs_array(self) -> np.ndarray:
        return np.asarray(self.xs, dtype=float)

    @cached_property
    def ys_array(self) -> np.ndarray:
        return np.asarray(self.ys, dtype=float)

    @property
    def x_min(self) -> float:
        return self.chain[0].x

    @property
    def x_max(self) -> float:
        return self.chain[-1].x

    @cached_property
    def y_max(self) -> float:
        return max(self.ys)

    @cached_property
    def base(self) -> Segment:
        return Segment(self.chain[0], self.chain[-1])

    @cached_property
    def edges(self) -> Tuple[Segment, ...]:
        return tuple(Segment(self.chain[i], self.chain[i + 1]) for i in range(self.n - 1))

    @cached_property
    def area(self) -> float:
        return polygon_area(self.chain)

    def bbox(self) -> Tuple[float, float, float, float]:
        """(x_min, y_min, x_max, y_max) of the region."""
        return (self.x_min, 0.0, self.x_max, self.y_max)

    def height_at(self, x: float) -> float:
        """
        Chain height above the base at x.

        Returns -inf outside [x_min, x_max] (beyond tolerance); x within
        tolerance of the range is clamped.
        """
        tol = get_tolerance()
        if x < self.x_min - tol or x > self.x_max + tol:
            return -math.inf
        x = min(max(x, self.x_min), self.x_max)
        i = bisect_right(self.xs, x) - 1
        if i >= self.n - 1:
            return self.chain[-1].y
        a, b = self.chain[i], self.chain[i + 1]
        t = (x - a.x) / (b.x - a.x)
        return a.y + t * (b.y - a.y)

    def heights_at(self, xs: np.ndarray) -> np.ndarray:
        """Vectorised ``height_at`` for x inside the terrain range."""
        return np.interp(xs, self.xs_array, self.ys_array)

    def vertices_between(self, lo: float, hi: float) -> range:
        """Indices of chain vertices with lo < x < hi (strict)."""
        return range(bisect_right(self.xs, lo), bisect_left(self.xs, hi))

    def max_height(self, lo: float, hi: float) -> float:
        """Maximum chain height over [lo, hi] clipped to the terrain range."""
        lo, hi = max(lo, self.x_min), min(hi, self.x_max)
        if lo > hi:
            return -math.inf
        best = max(self.height_at(lo), self.height_at(hi))
        for i in self.vertices_between(lo, hi):
            best = max(best, self.chain[i].y)
        return best

    def min_height(self, lo: float, hi: float) -> float:
        """Minimum chain height over [lo, hi] clipped to the terrain range."""
        lo, hi = max(lo, self.x_min), min(hi, self.x_max)
        if lo > hi:
            return math.inf
        best = min(self.height_at(lo), self.height_at(hi))
        for i in self.vertices_between(lo, hi):
            best = min(best, self.chain[i].y)
        return best

    def superlevel_intervals(self, level: float, lo: float, hi: float) -> List[Tuple[float, float]]:
        """
        Maximal x-ranges inside [lo, hi] where the chain is at or above level.

        Point ranges (a peak exactly at level) are kept as (x, x).
        """
        tol = get_tolerance()
        lo, hi = max(lo, self.x_min), min(hi, self.x_max)
        if lo > hi + tol:
            return []
        if hi - lo <= tol:
            return [(lo, lo)] if self.height_at(lo) >= level - tol else []

        breaks = [lo] + [self.chain[i].x for i in self.vertices_between(lo, hi)] + [hi]
        pieces: List[Tuple[float, float]] = []
        for p, q in zip(breaks, breaks[1:]):
            gp = self.height_at(p) - level
            gq = self.height_at(q) - level
            p_in, q_in = gp >= -tol, gq >= -tol
            if p_in and q_in:
                pieces.append((p, q))
            elif p_in:
                r = p + max(gp, 0.0) / (max(gp, 0.0) - gq) * (q - p)
                pieces.append((p, r))
            elif q_in:
                r = p + gp / (gp - max(gq, 0.0)) * (q - p)
                pieces.append((r, q))

        merged: List[Tuple[float, float]] = []
        for start, end in pieces:
            if merged and start <= merged[-1][1] + tol:
                merged[-1] = (merged[-1][0], max(merged[-1][1], end))
            else:
                merged.append((start, end))
        return merged

    def reach_on_base(self, p: Point) -> Tuple[float, float, int, int]:
        """
        Portion of the base visible from p.

        Args:
            p: Point inside the region

        Returns:
            (left_x, right_x, left_support, right_support); supports are the
            indices of the chain vertices that bind each end (0 and n-1 when
            the base endpoints bind)
        """
        left_x, left_support = self.x_min, 0
        right_x, right_support = self.x_max, self.n - 1
        for i, v in enumerate(self.chain):
            if v.y >= p.y:
                continue
            # base intercept of the line through p and v
            c = (p.y * v.x - v.y * p.x) / (p.y - v.y)
            if v.x < p.x and c > left_x:
                left_x, left_support = c, i
            elif v.x > p.x and c < right_x:
                right_x, right_support = c, i
        return left_x, right_x, left_support, right_support


def build_terrain(vertices: Sequence[PointLike]) -> Terrain:
    """
    Validate a vertex chain and build a Terrain.

    Args:
        vertices: Chain vertices, left to right

    Returns:
        Terrain translated so that its base lies on y = 0

    Raises:
        TooFewPointsError, InvalidPointError, NonMonotoneError,
        UnequalEndHeightsError, BelowBaseError, DegenerateAreaError
    """
    if len(vertices) < 3:
        raise TooFewPointsError(
            message=f"A terrain needs at least 3 vertices, got {len(vertices)}",
            count=len(vertices),
            required=3
        )

    pts = [v if isinstance(v, Point) else Point(float(v[0]), float(v[1])) for v in vertices]
    tol = get_tolerance()

    for i in range(1, len(pts)):
        if not pts[i].x > pts[i - 1].x:
            raise NonMonotoneError(
                message=f"x must strictly increase along the chain (vertex {i})",
                index=i
            )

    base_y = pts[0].y
    if abs(pts[-1].y - base_y) > tol:
        raise UnequalEndHeightsError(first_y=base_y, last_y=pts[-1].y)

    for i, p in enumerate(pts):
        if p.y < base_y - tol:
            raise BelowBaseError(
                message=f"Vertex {i} lies below the base",
                index=i
            )

    if all(abs(p.y - base_y) <= tol for p in pts):
        raise DegenerateAreaError()

    chain = [Point(pts[0].x, 0.0)]
    chain += [Point(p.x, max(p.y - base_y, 0.0)) for p in pts[1:-1]]
    chain.append(Point(pts[-1].x, 0.0))

    pinched = tuple(i for i in range(1, len(chain) - 1) if chain[i].y <= tol)
    if pinched:
        logger.warning(f"Interior vertices {list(pinched)} touch the base; region is pinched")

    terrain = Terrain(chain=tuple(chain), pinched=pinched)
    logger.debug(f"Built terrain with {terrain.n} vertices, base [{terrain.x_min}, {terrain.x_max}]")
    return terrain


def classify_vertices(T: Terrain) -> List[VertexClass]:
    """Label every chain vertex convex, reflex or endpoint."""
    labels = [VertexClass(0, VertexKind.ENDPOINT)]
    for i in range(1, T.n - 1):
        # the region lies below the chain: a right turn bulges outward
        turn = orientation(T.chain[i - 1], T.chain[i], T.chain[i + 1])
        kind = VertexKind.REFLEX if turn > 0 else VertexKind.CONVEX
        labels.append(VertexClass(i, kind))
    labels.append(VertexClass(T.n - 1, VertexKind.ENDPOINT))
    return labels


def reflex_indices(T: Terrain) -> List[int]:
    return [c.index for c in classify_vertices(T) if c.kind == VertexKind.REFLEX]


def point_in_terrain(T: Terrain, p: Point) -> bool:
    """True iff p lies in the closed region."""
    tol = get_tolerance()
    if p.x < T.x_min - tol or p.x > T.x_max + tol:
        return False
    return -tol <= p.y <= T.height_at(p.x) + tol


def segment_in_terrain(T: Terrain, s: Segment) -> bool:
    """
    True iff every point of s lies in the closed region.

    The gap between chain and segment is piecewise linear with breaks at
    chain vertices, so checking the endpoints and the vertices strictly
    inside the segment's x-range is exact. Touching a reflex vertex is
    allowed.
    """
    if not (point_in_terrain(T, s.a) and point_in_terrain(T, s.b)):
        return False
    a, b = (s.a, s.b) if s.a.x <= s.b.x else (s.b, s.a)
    dx = b.x - a.x
    if dx <= get_tolerance():
        return True
    tol = get_tolerance()
    slope = (b.y - a.y) / dx
    for i in T.vertices_between(a.x, b.x):
        v = T.chain[i]
        if a.y + slope * (v.x - a.x) > v.y + tol:
            return False
    return True


def visible(T: Terrain, p: Point, q: Point) -> bool:
    """Mutual visibility inside the closed region."""
    return segment_in_terrain(T, Segment.between(p, q))


def _extend(T: Terrain, start: Point, slope: float, direction: int) -> Point:
    """
    Walk along the line from start in x-direction +1/-1 until it leaves
    the region (above the chain, below the base or past an end).
    """
    tol = get_tolerance()
    xs = T.xs

    def line_y(x: float) -> float:
        return start.y + slope * (x - start.x)

    if direction > 0:
        breaks = [x for x in xs[bisect_right(xs, start.x + tol):]]
        if not breaks or breaks[-1] < T.x_max:
            breaks.append(T.x_max)
    else:
        breaks = [x for x in reversed(xs[:bisect_left(xs, start.x - tol)])]
        if not breaks or breaks[-1] > T.x_min:
            breaks.append(T.x_min)

    xc = start.x
    for xb in breaks:
        g_c = max(T.height_at(xc) - line_y(xc), 0.0)
        y_c = max(line_y(xc), 0.0)
        g_b = T.height_at(xb) - line_y(xb)
        y_b = line_y(xb)
        stop = None
        if g_b < -tol:
            stop = xc + g_c / (g_c - g_b) * (xb - xc)
        if y_b < -tol:
            cand = xc + y_c / (y_c - y_b) * (xb - xc)
            stop = cand if stop is None else (min(stop, cand) if direction > 0 else max(stop, cand))
        if stop is not None:
            return Point(stop, max(line_y(stop), 0.0))
        xc = xb
    return Point(xc, max(line_y(xc), 0.0))


def prolong_chord(T: Terrain, u: Point, v: Point) -> Optional[Segment]:
    """
    Maximal extension of u-v along its line inside the closed region.

    Returns:
        Segment with ``a`` the left (or lower) end, or None if u-v itself
        leaves the region
    """
    if not visible(T, u, v):
        return None
    tol = get_tolerance()
    if abs(u.x - v.x) <= tol:
        x = (u.x + v.x) / 2.0
        return Segment.between(Point(x, 0.0), Point(x, max(T.height_at(x), 0.0)))

    a, b = (u, v) if u.x < v.x else (v, u)
    slope = (b.y - a.y) / (b.x - a.x)
    left = _extend(T, a, slope, -1)
    right = _extend(T, b, slope, +1)
    return Segment.between(left, right)
