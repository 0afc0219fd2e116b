"""
Grid decomposition for the k-gon approximation.

Four big squares cover the terrain so that any candidate polygon fits
inside one of them; each big square is tiled by fine cells, and the
inside-the-region pieces of fine-cell sides become boundary intervals.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple
import logging
import math

from ..geometry.primitives import Point, Segment
from ..geometry.terrain import Terrain
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


class CellLevel(str, Enum):
    BIG = "big"
    FINE = "fine"


class CellSide(str, Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"

    @property
    def horizontal(self) -> bool:
        return self in (CellSide.N, CellSide.S)


SideKey = Tuple[int, CellSide]


@dataclass(frozen=True)
class GridCell:
    """Axis-aligned square cell; ``origin`` is its bottom-left corner."""
    cell_id: int
    origin: Point
    side: float
    level: CellLevel
    parent: Optional[int] = None
    row: int = 0
    col: int = 0

    @property
    def x_max(self) -> float:
        return self.origin.x + self.side

    @property
    def y_max(self) -> float:
        return self.origin.y + self.side

    def corners(self) -> Tuple[Point, Point, Point, Point]:
        x0, y0, x1, y1 = self.origin.x, self.origin.y, self.x_max, self.y_max
        return (Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1))

    def side_segment(self, side: CellSide) -> Segment:
        """Side as a segment; horizontal sides run left to right, vertical ones upward."""
        sw, se, ne, nw = self.corners()
        return {
            CellSide.S: Segment(sw, se),
            CellSide.N: Segment(nw, ne),
            CellSide.W: Segment(sw, nw),
            CellSide.E: Segment(se, ne),
        }[side]

    def contains(self, p: Point) -> bool:
        tol = get_tolerance()
        return (self.origin.x - tol <= p.x <= self.x_max + tol
                and self.origin.y - tol <= p.y <= self.y_max + tol)

    def center(self) -> Point:
        return Point(self.origin.x + self.side / 2.0, self.origin.y + self.side / 2.0)


@dataclass(frozen=True)
class BoundaryInterval:
    """
    Maximal piece of a fine-cell side lying in the closed region.

    ``seg`` runs along the side direction; ``index`` orders the pieces on
    their side. Single points are kept as degenerate segments.
    """
    cell_id: int
    side: CellSide
    seg: Segment
    index: int

    @property
    def side_key(self) -> SideKey:
        return (self.cell_id, self.side)

    @property
    def length(self) -> float:
        return self.seg.length

    @property
    def start(self) -> float:
        """Position of ``seg.a`` along the side axis."""
        return self.seg.a.x if self.side.horizontal else self.seg.a.y

    @property
    def end(self) -> float:
        return self.seg.b.x if self.side.horizontal else self.seg.b.y

    def endpoints(self) -> Tuple[Point, ...]:
        if self.seg.degenerate:
            return (self.seg.a,)
        return (self.seg.a, self.seg.b)


def big_cell_origins(T: Terrain, k: int, scale: float) -> List[Point]:
    x0 = T.x_min
    return [
        Point(x0, 0.0),
        Point(x0 + k * scale, 0.0),
        Point(x0, k * scale),
        Point(x0 + k * scale, k * scale),
    ]


def build_grid(T: Terrain, k: int, epsilon: float, scale: float) -> List[GridCell]:
    """
    Four big cells of side 2k*scale and the fine cells meeting the region.

    Args:
        T: Validated terrain
        k: Maximum polygon size
        epsilon: Grid accuracy; fine cells have side epsilon*scale
        scale: Length scale (twice the diameter)

    Returns:
        Big cells (ids 0-3) followed by the retained fine cells
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")

    big_side = 2 * k * scale
    fine_side = epsilon * scale
    per_side = int(math.ceil(2 * k / epsilon - 1e-12))

    cells: List[GridCell] = [
        GridCell(cell_id=i, origin=o, side=big_side, level=CellLevel.BIG)
        for i, o in enumerate(big_cell_origins(T, k, scale))
    ]

    tol = get_tolerance()
    next_id = len(cells)
    for big in cells[:4]:
        ox, oy = big.origin.x, big.origin.y
        col_lo = max(0, int(math.floor((T.x_min - ox) / fine_side)))
        col_hi = min(per_side - 1, int(math.floor((T.x_max - ox) / fine_side)))
        for col in range(col_lo, col_hi + 1):
            cx = ox + col * fine_side
            top = T.max_height(cx, cx + fine_side)
            if not math.isfinite(top):
                continue
            row_lo = max(0, int(math.floor((0.0 - oy) / fine_side)))
            row_hi = min(per_side - 1, int(math.floor((top + tol - oy) / fine_side)))
            for row in range(row_lo, row_hi + 1):
                cells.append(GridCell(
                    cell_id=next_id,
                    origin=Point(cx, oy + row * fine_side),
                    side=fine_side,
                    level=CellLevel.FINE,
                    parent=big.cell_id,
                    row=row,
                    col=col
                ))
                next_id += 1

    logger.info(
        f"Grid: big side {big_side:g}, fine side {fine_side:g}, "
        f"{len(cells) - 4} fine cells meet the terrain"
    )
    return cells


def big_cells(cells: List[GridCell]) -> List[GridCell]:
    return [c for c in cells if c.level == CellLevel.BIG]


def fine_cells(cells: List[GridCell], parent: Optional[int] = None) -> List[GridCell]:
    return [
        c for c in cells
        if c.level == CellLevel.FINE and (parent is None or c.parent == parent)
    ]


def is_boundary_cell(T: Terrain, cell: GridCell) -> bool:
    """
    True iff the closed cell touches the region boundary.

    The boundary is the chain, the base y = 0 and the two ends x = x_min
    and x = x_max; a cell resting on the base or on an end counts.
    """
    tol = get_tolerance()
    interior = (
        cell.origin.x > T.x_min + tol
        and cell.x_max < T.x_max - tol
        and cell.origin.y > tol
        and cell.y_max < T.min_height(cell.origin.x, cell.x_max) - tol
    )
    return not interior


def side_pieces(T: Terrain, cell: GridCell, side: CellSide) -> List[Segment]:
    """Maximal pieces of one cell side inside the closed region."""
    tol = get_tolerance()
    seg = cell.side_segment(side)
    if side.horizontal:
        y = seg.a.y
        if y < -tol:
            return []
        return [
            Segment.between(Point(lo, y), Point(hi, y))
            for lo, hi in T.superlevel_intervals(y, seg.a.x, seg.b.x)
        ]
    x = seg.a.x
    if x < T.x_min - tol or x > T.x_max + tol:
        return []
    lo = max(seg.a.y, 0.0)
    hi = min(seg.b.y, T.height_at(x))
    if lo > hi + tol:
        return []
    return [Segment.between(Point(x, lo), Point(x, max(lo, hi)))]


def extract_intervals(T: Terrain, cells: List[GridCell]) -> List[BoundaryInterval]:
    """
    Inside-the-region pieces of every fine-cell side, ordered along each side.
    """
    intervals: List[BoundaryInterval] = []
    for cell in cells:
        if cell.level != CellLevel.FINE:
            continue
        for side in CellSide:
            for index, seg in enumerate(side_pieces(T, cell, side)):
                intervals.append(BoundaryInterval(cell.cell_id, side, seg, index))
    logger.debug(f"Extracted {len(intervals)} boundary intervals from {len(cells)} cells")
    return intervals


def intervals_by_cell(intervals: List[BoundaryInterval]) -> Dict[int, List[BoundaryInterval]]:
    grouped: Dict[int, List[BoundaryInterval]] = {}
    for iv in intervals:
        grouped.setdefault(iv.cell_id, []).append(iv)
    return grouped


def intervals_by_side(intervals: List[BoundaryInterval]) -> Dict[SideKey, List[BoundaryInterval]]:
    grouped: Dict[SideKey, List[BoundaryInterval]] = {}
    for iv in intervals:
        grouped.setdefault(iv.side_key, []).append(iv)
    return grouped
