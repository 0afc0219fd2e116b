"""
Visibility between boundary intervals.

A range tree over interval indices stores, at each node, the intervals of
its index range in a ``SortedKeyList``; visibility ranges computed on a
target side are then answered with a handful of bisections. Weak
visibility itself is decided exactly: the visible part of a segment only
changes where a line through a reflex vertex and a source endpoint, or
through two reflex vertices, crosses it.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple
import logging

from sortedcontainers import SortedKeyList

from .grid import BoundaryInterval, CellSide, SideKey
from ..geometry.primitives import Point, Segment
from ..geometry.terrain import Terrain, reflex_indices, visible
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)

IntervalId = Tuple[int, CellSide, int]


def interval_id(iv: BoundaryInterval) -> IntervalId:
    return (iv.cell_id, iv.side, iv.index)


class VisibilityIndex:
    """
    Range tree over the intervals of one cell side.

    ``query(lo, hi, a, b)`` returns the first interval with position in
    [lo, hi] meeting the window [a, b] of the side axis; ``stab`` walks
    the positions with it to collect every hit of a visibility range.
    """

    def __init__(self, intervals: Sequence[BoundaryInterval]):
        self.intervals = sorted(intervals, key=lambda iv: iv.index)
        self.size = len(self.intervals)
        self._position = {interval_id(iv): pos for pos, iv in enumerate(self.intervals)}
        self._nodes: Dict[int, SortedKeyList] = {}
        self._spans: Dict[int, Tuple[int, int]] = {}
        if self.size:
            self._build(1, 0, self.size - 1)

    def _build(self, node: int, lo: int, hi: int) -> None:
        items = SortedKeyList(key=lambda item: item[1])
        for pos in range(lo, hi + 1):
            iv = self.intervals[pos]
            items.add((iv.start, iv.end, pos))
        self._nodes[node] = items
        self._spans[node] = (lo, hi)
        if lo < hi:
            mid = (lo + hi) // 2
            self._build(2 * node, lo, mid)
            self._build(2 * node + 1, mid + 1, hi)

    def _canonical(self, node: int, lo: int, hi: int) -> List[int]:
        span_lo, span_hi = self._spans[node]
        if hi < span_lo or span_hi < lo:
            return []
        if lo <= span_lo and span_hi <= hi:
            return [node]
        return self._canonical(2 * node, lo, hi) + self._canonical(2 * node + 1, lo, hi)

    def _hits(self, node: int, a: float, b: float) -> List[int]:
        tol = get_tolerance()
        items = self._nodes[node]
        found = []
        # intervals on a side are disjoint, so start grows with end
        for start, end, pos in items.irange_key(min_key=a - tol):
            if start > b + tol:
                break
            found.append(pos)
        return found

    def query(self, lo: int, hi: int, a: float, b: float) -> Optional[BoundaryInterval]:
        """First interval with index in [lo, hi] meeting [a, b], or None."""
        if not self.size:
            return None
        lo, hi = max(lo, 0), min(hi, self.size - 1)
        if lo > hi:
            return None
        hits = [pos for node in self._canonical(1, lo, hi) for pos in self._hits(node, a, b)[:1]]
        return self.intervals[min(hits)] if hits else None

    def stab(self, a: float, b: float) -> List[BoundaryInterval]:
        """Every interval meeting [a, b], by successive index-range queries."""
        found: List[BoundaryInterval] = []
        lo = 0
        while lo < self.size:
            hit = self.query(lo, self.size - 1, a, b)
            if hit is None:
                break
            found.append(hit)
            lo = self._position[interval_id(hit)] + 1
        return found


def build_visibility_index(T: Terrain, intervals: Sequence[BoundaryInterval]) -> VisibilityIndex:
    """Index the intervals of one cell side by position along the side."""
    return VisibilityIndex(intervals)


@dataclass(frozen=True)
class VisibilityRange:
    """Part [lo, hi] of a target side (side-axis positions) seen from a source interval."""
    source: IntervalId
    target: SideKey
    lo: float
    hi: float
    witness: Tuple[Point, Point]


def _span_reflex(T: Terrain, reflex: Sequence[int], points: Sequence[Point]) -> List[Point]:
    lo = min(p.x for p in points)
    hi = max(p.x for p in points)
    return [T.chain[i] for i in reflex if lo < T.chain[i].x < hi]


def _axis_hit(p: Point, q: Point, horizontal: bool, level: float) -> Optional[float]:
    """Side-axis position where line p-q crosses the axis-parallel line at level."""
    tol = get_tolerance()
    if horizontal:
        if abs(q.y - p.y) <= tol:
            return None
        return p.x + (level - p.y) * (q.x - p.x) / (q.y - p.y)
    if abs(q.x - p.x) <= tol:
        return None
    return p.y + (level - p.x) * (q.y - p.y) / (q.x - p.x)


def _segment_hit(seg: Segment, p: Point, q: Point) -> Optional[Point]:
    """Point where line p-q crosses seg, if it does."""
    tol = get_tolerance()
    d = seg.b - seg.a
    e = q - p
    denom = d.x * e.y - d.y * e.x
    if abs(denom) <= tol:
        return None
    w = p - seg.a
    t = (w.x * e.y - w.y * e.x) / denom
    if -tol <= t <= 1 + tol:
        return seg.point_at(min(max(t, 0.0), 1.0))
    return None


def point_visible_from_segment(
    T: Terrain,
    seg: Segment,
    q: Point,
    reflex: Optional[Sequence[int]] = None
) -> Optional[Point]:
    """
    A point of seg that sees q, or None.

    The visible part of seg is a union of closed intervals whose ends are
    seg's endpoints or shadow boundaries through reflex vertices, so those
    positions are the only ones tested.
    """
    if seg.degenerate:
        return seg.a if visible(T, seg.a, q) else None
    if reflex is None:
        reflex = reflex_indices(T)
    candidates = [seg.a, seg.b, seg.point_at(0.5)]
    for v in _span_reflex(T, reflex, (seg.a, seg.b, q)):
        hit = _segment_hit(seg, q, v)
        if hit is not None:
            candidates.append(hit)
    for c in candidates:
        if visible(T, c, q):
            return c
    return None


def _target_point(iv: BoundaryInterval, pos: float) -> Point:
    if iv.side.horizontal:
        return Point(pos, iv.seg.a.y)
    return Point(iv.seg.a.x, pos)


def _critical_positions(
    T: Terrain,
    source: BoundaryInterval,
    target: BoundaryInterval,
    reflex: Sequence[int]
) -> List[float]:
    horizontal = target.side.horizontal
    level = target.seg.a.y if horizontal else target.seg.a.x
    lo, hi = target.start, target.end
    tol = get_tolerance()

    span = _span_reflex(T, reflex, source.endpoints() + target.endpoints())
    positions = {lo, hi}
    for v in span:
        for p in source.endpoints():
            hit = _axis_hit(p, v, horizontal, level)
            if hit is not None:
                positions.add(hit)
    for v, w in combinations(span, 2):
        hit = _axis_hit(v, w, horizontal, level)
        if hit is not None:
            positions.add(hit)
    return sorted(p for p in positions if lo - tol <= p <= hi + tol)


def visibility_ranges(
    T: Terrain,
    source: BoundaryInterval,
    target: Sequence[BoundaryInterval]
) -> List[VisibilityRange]:
    """
    Parts of a cell side visible from some point of the source interval.

    Args:
        T: Validated terrain
        source: Interval the visibility is measured from
        target: Intervals of the target side (its inside-the-region pieces)

    Returns:
        Maximal visible ranges, each with a witness pair
    """
    reflex = reflex_indices(T)
    ranges: List[VisibilityRange] = []
    for piece in sorted(target, key=lambda iv: iv.index):
        positions = _critical_positions(T, source, piece, reflex)
        samples: List[float] = []
        for i, pos in enumerate(positions):
            samples.append(pos)
            if i + 1 < len(positions):
                samples.append((pos + positions[i + 1]) / 2.0)

        run_lo: Optional[float] = None
        run_hi = 0.0
        run_witness: Optional[Tuple[Point, Point]] = None
        for pos in samples:
            q = _target_point(piece, min(max(pos, piece.start), piece.end))
            p = point_visible_from_segment(T, source.seg, q, reflex)
            if p is not None:
                if run_lo is None:
                    run_lo, run_witness = pos, (p, q)
                run_hi = pos
            elif run_lo is not None:
                ranges.append(VisibilityRange(interval_id(source), piece.side_key, run_lo, run_hi, run_witness))
                run_lo = None
        if run_lo is not None:
            ranges.append(VisibilityRange(interval_id(source), piece.side_key, run_lo, run_hi, run_witness))
    return ranges


def interval_witness(
    T: Terrain,
    a: BoundaryInterval,
    b: BoundaryInterval
) -> Optional[Tuple[Point, Point]]:
    """A pair (p, q), p on a and q on b, that see each other, or None."""
    for r in visibility_ranges(T, a, [b]):
        return r.witness
    return None


def visible_interval_pairs(
    T: Terrain,
    a_intervals: Sequence[BoundaryInterval],
    b_intervals: Sequence[BoundaryInterval]
) -> List[Tuple[BoundaryInterval, BoundaryInterval]]:
    """
    All pairs (s, t), s from a_intervals and t from b_intervals, such that
    some point of s sees some point of t.
    """
    by_side: Dict[SideKey, List[BoundaryInterval]] = {}
    for iv in b_intervals:
        by_side.setdefault(iv.side_key, []).append(iv)
    indexes = {key: build_visibility_index(T, ivs) for key, ivs in by_side.items()}

    pairs: List[Tuple[BoundaryInterval, BoundaryInterval]] = []
    for source in a_intervals:
        seen: Set[IntervalId] = set()
        for key, ivs in by_side.items():
            index = indexes[key]
            for r in visibility_ranges(T, source, ivs):
                for hit in index.stab(r.lo, r.hi):
                    if interval_id(hit) not in seen:
                        seen.add(interval_id(hit))
                        pairs.append((source, hit))
    logger.debug(f"{len(pairs)} visible pairs among {len(a_intervals)}x{len(b_intervals)} intervals")
    return pairs
