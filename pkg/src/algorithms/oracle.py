"""
Brute-force reference values.

Samples the terrain boundary densely and searches all sample pairs and
k-subsets. Containment is decided by its own crossing-number test on the
terrain polygon, independent of the geometry core's queries.
"""

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Sequence, Tuple
import logging
import math

import numpy as np

from ..config import Config
from ..geometry.primitives import Point, convex_hull, polygon_measure
from ..geometry.terrain import Terrain
from ..utils.error_handler import InfeasibleKError
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)

COARSEN_FACTOR = 1.25


@dataclass(frozen=True)
class SampleSet:
    """Boundary samples at arc-length spacing at most ``delta``, chain vertices included."""
    points: Tuple[Point, ...]
    delta: float

    def as_array(self) -> np.ndarray:
        return np.array([p.as_tuple() for p in self.points], dtype=float)


@dataclass(frozen=True)
class OracleResult:
    value: float
    vertices: Tuple[Point, ...]
    delta: float


def build_sample_set(T: Terrain, delta: float) -> SampleSet:
    """
    Dyadic samples along every boundary edge.

    Each edge is split into 2^m equal parts with the smallest m keeping the
    spacing at most delta, so halving delta yields a superset.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    ring = list(T.chain)
    pts: List[Point] = []
    for i in range(len(ring)):
        a, b = ring[i], ring[(i + 1) % len(ring)]
        length = a.distance_to(b)
        parts = 1 if length <= delta else 2 ** int(math.ceil(math.log2(length / delta)))
        for j in range(parts):
            t = j / parts
            pts.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    return SampleSet(points=tuple(pts), delta=delta)


# =============================================================================
# Independent containment
# =============================================================================

class _PolygonTest:
    """Vectorised crossing-number containment for the terrain polygon."""

    def __init__(self, T: Terrain):
        self.V = np.array([p.as_tuple() for p in T.chain], dtype=float)
        self.E0 = self.V
        self.E1 = np.roll(self.V, -1, axis=0)
        self.tol = get_tolerance()

    def points_inside(self, P: np.ndarray) -> np.ndarray:
        """Closed-polygon membership of each row of P."""
        px = P[:, 0:1]
        py = P[:, 1:2]
        x0, y0 = self.E0[:, 0], self.E0[:, 1]
        x1, y1 = self.E1[:, 0], self.E1[:, 1]
        dx, dy = x1 - x0, y1 - y0
        seg_len2 = dx * dx + dy * dy

        # on-boundary: distance to some edge within tolerance
        t = np.clip(((px - x0) * dx + (py - y0) * dy) / seg_len2, 0.0, 1.0)
        dist = np.hypot(px - (x0 + t * dx), py - (y0 + t * dy))
        on_edge = (dist <= self.tol * 10).any(axis=1)

        crosses = (y0 <= py) != (y1 <= py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_at = x0 + (py - y0) * dx / dy
        hits = crosses & (px < x_at)
        inside = hits.sum(axis=1) % 2 == 1
        return on_edge | inside

    def _sign(self, value: np.ndarray, scale: np.ndarray) -> np.ndarray:
        s = np.sign(value)
        s[np.abs(value) <= self.tol * np.maximum(1.0, scale)] = 0
        return s

    def segments_inside(self, p: np.ndarray, Q: np.ndarray) -> np.ndarray:
        """Whether each segment p-Q[i] lies in the closed polygon."""
        if len(Q) == 0:
            return np.zeros(0, dtype=bool)
        d = Q - p
        dlen = np.hypot(d[:, 0], d[:, 1])[:, None]
        e0, e1 = self.E0[None, :, :], self.E1[None, :, :]
        f = (self.E1 - self.E0)[None, :, :]
        flen = np.hypot(f[..., 0], f[..., 1])

        def cross(ax, ay, bx, by):
            return ax * by - ay * bx

        r0 = e0 - p
        r1 = e1 - p
        o1 = self._sign(cross(d[:, None, 0], d[:, None, 1], r0[..., 0], r0[..., 1]),
                        dlen * np.hypot(r0[..., 0], r0[..., 1]))
        o2 = self._sign(cross(d[:, None, 0], d[:, None, 1], r1[..., 0], r1[..., 1]),
                        dlen * np.hypot(r1[..., 0], r1[..., 1]))
        s0 = p - e0
        s1 = Q[:, None, :] - e0
        o3 = self._sign(cross(f[..., 0], f[..., 1], s0[..., 0], s0[..., 1]),
                        flen * np.hypot(s0[..., 0], s0[..., 1]))
        o4 = self._sign(cross(f[..., 0], f[..., 1], s1[..., 0], s1[..., 1]),
                        flen * np.hypot(s1[..., 0], s1[..., 1]))
        proper = ((o1 * o2 < 0) & (o3 * o4 < 0)).any(axis=1)

        # polygon vertices lying on the open segment
        w = self.V[None, :, :] - p
        c = cross(d[:, None, 0], d[:, None, 1], w[..., 0], w[..., 1])
        wlen = np.hypot(w[..., 0], w[..., 1])
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (w[..., 0] * d[:, None, 0] + w[..., 1] * d[:, None, 1]) / (dlen * dlen)
        gap = self.tol / np.maximum(dlen, self.tol)
        touching = ((np.abs(c) <= self.tol * np.maximum(1.0, dlen * wlen))
                    & (t > gap) & (t < 1 - gap)).any(axis=1)

        ok = ~proper & self.points_inside(p + 0.5 * d)
        ok &= self.points_inside(Q) & self.points_inside(p[None, :])[0]

        for i in np.flatnonzero(touching & ~proper):
            ok[i] = self._split_inside(p, Q[i])
        return ok

    def _split_inside(self, p: np.ndarray, q: np.ndarray) -> bool:
        """Segment through polygon vertices: test between consecutive touches."""
        d = q - p
        dd = float(d @ d)
        ts = {0.0, 1.0}
        for v in self.V:
            w = v - p
            if abs(d[0] * w[1] - d[1] * w[0]) <= self.tol * max(1.0, math.sqrt(dd * float(w @ w))):
                t = float(w @ d) / dd
                if 0.0 < t < 1.0:
                    ts.add(t)
        ts = sorted(ts)
        mids = np.array([p + 0.5 * (a + b) * d for a, b in zip(ts, ts[1:])])
        return bool(self.points_inside(mids).all())


# =============================================================================
# Oracles
# =============================================================================

def oracle_diameter(T: Terrain, delta: float) -> float:
    """Longest segment between two boundary samples that stays inside."""
    samples = build_sample_set(T, delta).as_array()
    test = _PolygonTest(T)
    best = 0.0
    for i in range(len(samples) - 1):
        rest = samples[i + 1:]
        dist = np.hypot(rest[:, 0] - samples[i, 0], rest[:, 1] - samples[i, 1])
        order = np.argsort(-dist)
        order = order[dist[order] > best]
        if order.size == 0:
            continue
        inside = test.segments_inside(samples[i], rest[order])
        if inside.any():
            best = max(best, float(dist[order[np.argmax(inside)]]))
    logger.debug(f"Oracle diameter {best:.6f} over {len(samples)} samples")
    return best


def oracle_contains_segment(T: Terrain, p: Point, q: Point) -> bool:
    """Independent check that the segment p-q lies in the closed region."""
    test = _PolygonTest(T)
    inside = test.segments_inside(np.array(p.as_tuple(), dtype=float), np.array([q.as_tuple()], dtype=float))
    return bool(inside[0])


def _visibility_matrix(test: _PolygonTest, S: np.ndarray) -> np.ndarray:
    n = len(S)
    vis = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        row = test.segments_inside(S[i], S[i + 1:])
        vis[i, i + 1:] = row
        vis[i + 1:, i] = row
    return vis


def _best_triangle(S: np.ndarray, vis: np.ndarray, measure: str) -> Tuple[float, Optional[Tuple[int, ...]]]:
    tol = get_tolerance()
    n = len(S)
    best, best_idx = 0.0, None
    D = np.hypot(S[:, None, 0] - S[None, :, 0], S[:, None, 1] - S[None, :, 1])
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            if not vis[i, j]:
                continue
            ls = np.flatnonzero(vis[i, j + 1:] & vis[j, j + 1:]) + j + 1
            if ls.size == 0:
                continue
            ax, ay = S[j] - S[i]
            bx, by = S[ls, 0] - S[i, 0], S[ls, 1] - S[i, 1]
            area = np.abs(ax * by - ay * bx) / 2.0
            if measure == "area":
                value = area
            else:
                value = D[i, j] + D[i, ls] + D[j, ls]
            value = np.where(area > tol, value, 0.0)
            m = int(np.argmax(value))
            if value[m] > best:
                best, best_idx = float(value[m]), (i, j, int(ls[m]))
    return best, best_idx


def _best_kgon(
    pts: Sequence[Point],
    vis: np.ndarray,
    k: int,
    measure: str
) -> Tuple[float, Optional[Tuple[Point, ...]]]:
    n = len(pts)
    best = [0.0, None]

    def extend(chosen: List[int], cand: np.ndarray) -> None:
        if len(chosen) >= 3:
            hull = convex_hull([pts[i] for i in chosen])
            if len(hull) < len(chosen):
                return
            value = polygon_measure(hull, measure)
            if value > best[0]:
                best[0], best[1] = value, tuple(hull)
        if len(chosen) == k:
            return
        for j in np.flatnonzero(cand):
            nxt = cand.copy()
            nxt[: j + 1] = False
            nxt &= vis[j]
            extend(chosen + [int(j)], nxt)

    extend([], np.ones(n, dtype=bool))
    return best[0], best[1]


def solve_oracle_kgon(
    T: Terrain,
    k: int,
    delta: float,
    measure: str = "perimeter",
    max_subsets: Optional[int] = None
) -> OracleResult:
    """
    Best convex polygon with at most k sample vertices, all edges inside.

    delta is coarsened until C(samples, k) fits ``max_subsets``.
    """
    if k < 3:
        raise InfeasibleKError(message=f"Oracle k-gon needs k >= 3, got {k}", k=k)
    cap = Config.ORACLE_MAX_SUBSETS if max_subsets is None else max_subsets

    samples = build_sample_set(T, delta)
    while comb(len(samples.points), k) > cap:
        samples = build_sample_set(T, samples.delta * COARSEN_FACTOR)
    if samples.delta != delta:
        logger.warning(
            f"Oracle delta coarsened from {delta:g} to {samples.delta:g} "
            f"({len(samples.points)} samples, k={k})"
        )

    S = samples.as_array()
    test = _PolygonTest(T)
    vis = _visibility_matrix(test, S)

    if k == 3:
        value, idx = _best_triangle(S, vis, measure)
        vertices = tuple(convex_hull([samples.points[i] for i in idx])) if idx else ()
    else:
        value, vertices = _best_kgon(samples.points, vis, k, measure)
        vertices = vertices or ()

    logger.debug(f"Oracle {measure} k={k}: {value:.6f} over {len(S)} samples")
    return OracleResult(value=value, vertices=vertices, delta=samples.delta)


def oracle_best_kgon(T: Terrain, k: int, delta: float, measure: str = "perimeter") -> float:
    """Brute-force lower bound on the best k-gon measure."""
    return solve_oracle_kgon(T, k, delta, measure).value
