"""
(1 - epsilon)-approximation of the largest perimeter or area convex
polygon with at most k vertices inside a terrain.

The terrain is covered by big cells tiled with fine cells. Sets of up to k
boundary cells that pairwise see each other are enumerated, one inside
interval per cell is chosen, every interval is shrunk to tiny pieces at
its ends, and the best convex polygon on the tiny-piece endpoints is kept.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple
import logging
import math

from .diameter import Chord, compute_diameter
from .grid import (
    BoundaryInterval,
    GridCell,
    big_cells,
    build_grid,
    extract_intervals,
    fine_cells,
    intervals_by_cell,
    is_boundary_cell,
)
from .visibility import IntervalId, interval_id, visible_interval_pairs
from ..geometry.primitives import (
    Point,
    Segment,
    convex_hull,
    hull_measure,
    in_convex_position,
    lexicographic_key,
    orientation,
    polygon_measure,
)
from ..geometry.terrain import Terrain, segment_in_terrain, visible
from ..schemas.geometry_schemas import ApproxConfig
from ..utils.error_handler import InfeasibleKError, NoPolygonFoundError
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon inside the terrain, vertices counter-clockwise."""
    vertices: Tuple[Point, ...]
    measure_value: float
    measure: str = "perimeter"

    def __len__(self) -> int:
        return len(self.vertices)


class PointVisibility:
    """Memoised point-to-point visibility for one terrain."""

    def __init__(self, T: Terrain):
        self.T = T
        self._cache: Dict[Tuple[Point, Point], bool] = {}

    def __call__(self, p: Point, q: Point) -> bool:
        key = (p, q) if p.key() <= q.key() else (q, p)
        hit = self._cache.get(key)
        if hit is None:
            hit = visible(self.T, p, q)
            self._cache[key] = hit
        return hit


class _Incumbent:
    """Best polygon so far under the lexicographic tie-break."""

    def __init__(self):
        self.polygon: Optional[ConvexPolygon] = None

    @property
    def value(self) -> float:
        return self.polygon.measure_value if self.polygon else 0.0

    def offer(self, poly: Optional[ConvexPolygon]) -> bool:
        if poly is None:
            return False
        if better_polygon(poly, self.polygon):
            self.polygon = poly
            return True
        return False


def better_polygon(cand: ConvexPolygon, best: Optional[ConvexPolygon]) -> bool:
    if best is None:
        return True
    tol = get_tolerance()
    if cand.measure_value > best.measure_value + tol:
        return True
    return (abs(cand.measure_value - best.measure_value) <= tol
            and lexicographic_key(cand.vertices) < lexicographic_key(best.vertices))


# =============================================================================
# Scale, seed and parameter conversions
# =============================================================================

def seed_scale(T: Terrain, k: int, diameter: Optional[Chord] = None) -> float:
    """
    Length scale of the grid: twice the diameter.

    Every side of an inscribed polygon is at most the diameter, so the same
    scale serves both measures; k only enters the big-cell size.
    """
    chord = diameter if diameter is not None else compute_diameter(T)
    return 2.0 * chord.length


def seed_polygon(T: Terrain, diameter: Chord, measure: str) -> Optional[ConvexPolygon]:
    """
    Best triangle with the diameter as a side and the third vertex on a
    chain vertex seen from both diameter ends.
    """
    a, b = diameter.seg.a, diameter.seg.b
    best: Optional[ConvexPolygon] = None
    for v in T.chain:
        if orientation(a, b, v) == 0:
            continue
        if not (visible(T, a, v) and visible(T, b, v)):
            continue
        hull = tuple(convex_hull((a, b, v)))
        poly = ConvexPolygon(hull, polygon_measure(hull, measure), measure)
        if better_polygon(poly, best):
            best = poly
    return best


def area_epsilon(epsilon: float) -> float:
    """Per-length accuracy whose square loss stays within 1 - epsilon."""
    return 1.0 - math.sqrt(1.0 - epsilon)


def tiny_subintervals(iv: BoundaryInterval, delta: float) -> List[BoundaryInterval]:
    """
    Two pieces of length min(delta, |iv|/2) at the ends of iv, or iv itself
    when it is no longer than 2*delta.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    length = iv.length
    if length <= 2 * delta:
        return [iv]
    t = min(delta, length / 2.0) / length
    head = Segment.between(iv.seg.a, iv.seg.point_at(t))
    tail = Segment.between(iv.seg.point_at(1.0 - t), iv.seg.b)
    return [
        BoundaryInterval(iv.cell_id, iv.side, head, iv.index),
        BoundaryInterval(iv.cell_id, iv.side, tail, iv.index),
    ]


# =============================================================================
# Best polygon on fixed intervals
# =============================================================================

def _unique_points(points: Sequence[Point]) -> List[Point]:
    unique: List[Point] = []
    for p in sorted(points, key=Point.key):
        if not unique or not unique[-1].close_to(p):
            unique.append(p)
    return unique


def best_polygon_on_intervals(
    T: Terrain,
    chosen: Sequence[BoundaryInterval],
    cfg: ApproxConfig,
    sees: Optional[PointVisibility] = None
) -> Optional[ConvexPolygon]:
    """
    Largest convex polygon with 3..k vertices among the interval endpoints.

    Args:
        T: Validated terrain
        chosen: Intervals whose endpoints are the candidate vertices
        cfg: Approximation settings (k and measure)
        sees: Shared visibility cache

    Returns:
        Best polygon whose vertices pairwise see each other, or None
    """
    sees = sees or PointVisibility(T)
    pts = _unique_points([p for iv in chosen for p in iv.endpoints()])
    n = len(pts)
    if n < 3:
        return None
    adj = [[i != j and sees(pts[i], pts[j]) for j in range(n)] for i in range(n)]

    best = _Incumbent()

    def extend(subset: List[int], start: int) -> None:
        if len(subset) >= 3:
            hull = tuple(convex_hull([pts[i] for i in subset]))
            best.offer(ConvexPolygon(hull, polygon_measure(hull, cfg.measure), cfg.measure))
        if len(subset) == cfg.k:
            return
        for j in range(start, n):
            if not all(adj[i][j] for i in subset):
                continue
            trial = subset + [j]
            if len(trial) >= 3 and not in_convex_position([pts[i] for i in trial]):
                continue
            extend(trial, j + 1)

    extend([], 0)

    poly = best.polygon
    if poly is None:
        return None
    m = len(poly.vertices)
    for i in range(m):
        if not segment_in_terrain(T, Segment.between(poly.vertices[i], poly.vertices[(i + 1) % m])):
            logger.debug("Discarding polygon with an edge outside the terrain")
            return None
    return poly


# =============================================================================
# Driver
# =============================================================================

class _KgonSearch:
    """State of one approximation run inside a single big cell."""

    def __init__(
        self,
        T: Terrain,
        cfg: ApproxConfig,
        cells: List[GridCell],
        ivs: Dict[int, List[BoundaryInterval]],
        delta: float,
        incumbent: _Incumbent,
        sees: PointVisibility
    ):
        self.T = T
        self.cfg = cfg
        self.cells = cells
        self.ivs = ivs
        self.delta = delta
        self.best = incumbent
        self.sees = sees
        self.tol = get_tolerance()
        self._adjacent: Dict[Tuple[int, int], bool] = {}
        self._pairs: Set[Tuple[IntervalId, IntervalId]] = set()
        self._done: Set[FrozenSet[IntervalId]] = set()
        self._points = {c.cell_id: [p for iv in ivs[c.cell_id] for p in iv.endpoints()] for c in cells}
        self.tuples_evaluated = 0

    def adjacent(self, a: int, b: int) -> bool:
        key = (min(a, b), max(a, b))
        if key not in self._adjacent:
            pairs = visible_interval_pairs(self.T, self.ivs[key[0]], self.ivs[key[1]])
            for s, t in pairs:
                self._pairs.add((interval_id(s), interval_id(t)))
                self._pairs.add((interval_id(t), interval_id(s)))
            self._adjacent[key] = bool(pairs)
        return self._adjacent[key]

    def bound(self, cell_ids: Sequence[int]) -> float:
        return hull_measure([p for c in cell_ids for p in self._points[c]], self.cfg.measure)

    def run(self) -> None:
        self._grow([], [c.cell_id for c in self.cells])

    def _grow(self, chosen: List[int], candidates: List[int]) -> None:
        if len(chosen) >= 2 and self.bound(chosen) > self.best.value + self.tol:
            self._evaluate(chosen)
        if len(chosen) == self.cfg.k or not candidates:
            return
        if chosen and self.bound(chosen + candidates) <= self.best.value + self.tol:
            return
        for pos, c in enumerate(candidates):
            rest = [d for d in candidates[pos + 1:] if self.adjacent(c, d)]
            self._grow(chosen + [c], rest)

    def _evaluate(self, chosen: List[int]) -> None:
        def pick(i: int, picked: List[BoundaryInterval]) -> None:
            if i == len(chosen):
                self._evaluate_tuple(picked)
                return
            for iv in self.ivs[chosen[i]]:
                if all((interval_id(p), interval_id(iv)) in self._pairs for p in picked):
                    pick(i + 1, picked + [iv])

        pick(0, [])

    def _evaluate_tuple(self, picked: List[BoundaryInterval]) -> None:
        key = frozenset(interval_id(iv) for iv in picked)
        if key in self._done:
            return
        self._done.add(key)
        if hull_measure([p for iv in picked for p in iv.endpoints()], self.cfg.measure) <= self.best.value + self.tol:
            return
        tiny = [piece for iv in picked for piece in tiny_subintervals(iv, self.delta)]
        self.tuples_evaluated += 1
        if self.best.offer(best_polygon_on_intervals(self.T, tiny, self.cfg, self.sees)):
            logger.debug(f"Improved to {self.best.value:.9f} with {len(picked)} intervals")


def _candidate_cells(
    T: Terrain,
    cells: List[GridCell],
    ivs: Dict[int, List[BoundaryInterval]]
) -> List[GridCell]:
    """Boundary cells with intervals, farthest from the terrain centre first."""
    cx = (T.x_min + T.x_max) / 2.0
    cy = T.y_max / 2.0
    usable = [c for c in cells if ivs.get(c.cell_id) and is_boundary_cell(T, c)]
    return sorted(
        usable,
        key=lambda c: (-math.hypot(c.center().x - cx, c.center().y - cy), c.cell_id)
    )


def approximate_largest_kgon(T: Terrain, cfg: ApproxConfig) -> ConvexPolygon:
    """
    Approximate the largest convex polygon with at most k vertices.

    Args:
        T: Validated terrain
        cfg: Approximation settings

    Returns:
        Convex polygon with measure >= (1 - epsilon) * optimum

    Raises:
        InfeasibleKError: k < 3
        NoPolygonFoundError: no convex polygon was found
    """
    if cfg.k < 3:
        raise InfeasibleKError(message=f"k-gon search needs k >= 3, got {cfg.k}", k=cfg.k)

    diameter = compute_diameter(T)
    scale = seed_scale(T, cfg.k, diameter)
    eps_eff = cfg.epsilon if cfg.measure == "perimeter" else area_epsilon(cfg.epsilon)
    eps_grid = eps_eff / 2.0
    delta = cfg.tiny_fraction * eps_eff * scale

    cells = build_grid(T, cfg.k, eps_grid, scale)
    ivs = intervals_by_cell(extract_intervals(T, cells))

    incumbent = _Incumbent()
    incumbent.offer(seed_polygon(T, diameter, cfg.measure))
    seed_value = incumbent.value
    sees = PointVisibility(T)

    for big in big_cells(cells):
        candidates = _candidate_cells(T, fine_cells(cells, big.cell_id), ivs)
        if len(candidates) < 2:
            continue
        search = _KgonSearch(T, cfg, candidates, ivs, delta, incumbent, sees)
        search.run()
        logger.debug(
            f"Big cell {big.cell_id}: {len(candidates)} candidate cells, "
            f"{search.tuples_evaluated} interval tuples evaluated"
        )

    if incumbent.polygon is None:
        raise NoPolygonFoundError()

    result = incumbent.polygon
    logger.info(
        f"Best {cfg.measure} {result.measure_value:.9f} with {len(result)} vertices "
        f"(k={cfg.k}, epsilon={cfg.epsilon}, seed {seed_value:.6f})"
    )
    return result
