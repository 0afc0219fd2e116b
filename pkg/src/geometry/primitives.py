"""
Planar primitives: points, segments, orientation and polygon measures.

Every sign decision is delegated to the tolerance layer in
``src.utils.predicates``.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple
import math

from ..utils.error_handler import InvalidPointError, TooFewPointsError
from ..utils.predicates import cross_sign, get_tolerance


@dataclass(frozen=True)
class Point:
    """Immutable point in the plane."""
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidPointError(coordinates=(self.x, self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor: float) -> "Point":
        return Point(self.x * factor, self.y * factor)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)

    def key(self) -> Tuple[float, float]:
        """Lexicographic sort key (x, then y)."""
        return (self.x, self.y)

    def close_to(self, other: "Point", tol: Optional[float] = None) -> bool:
        tol = get_tolerance() if tol is None else tol
        return abs(self.x - other.x) <= tol and abs(self.y - other.y) <= tol


@dataclass(frozen=True)
class Segment:
    """
    Closed segment between two points.

    ``degenerate`` must be set when both endpoints coincide.
    """
    a: Point
    b: Point
    degenerate: bool = False

    def __post_init__(self):
        if not self.degenerate and self.a.close_to(self.b):
            raise TooFewPointsError(
                message="Segment endpoints coincide; flag it as degenerate",
                count=1,
                required=2
            )

    @classmethod
    def between(cls, a: Point, b: Point) -> "Segment":
        """Build a segment, flagging it degenerate when a == b."""
        return cls(a, b, degenerate=a.close_to(b))

    @property
    def length(self) -> float:
        return self.a.distance_to(self.b)

    @property
    def direction(self) -> Point:
        return self.b - self.a

    def point_at(self, t: float) -> Point:
        """Point a + t (b - a)."""
        return Point(
            self.a.x + t * (self.b.x - self.a.x),
            self.a.y + t * (self.b.y - self.a.y)
        )

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a, self.degenerate)

    def is_horizontal(self) -> bool:
        return abs(self.a.y - self.b.y) <= get_tolerance()

    def contains_point(self, p: Point) -> bool:
        """True if p lies on the closed segment (within tolerance)."""
        if orientation(self.a, self.b, p) != 0:
            return False
        tol = get_tolerance()
        return (
            min(self.a.x, self.b.x) - tol <= p.x <= max(self.a.x, self.b.x) + tol
            and min(self.a.y, self.b.y) - tol <= p.y <= max(self.a.y, self.b.y) + tol
        )

    def sorted_key(self) -> Tuple[Tuple[float, float], Tuple[float, float]]:
        first, second = sorted((self.a.key(), self.b.key()))
        return (first, second)


def orientation(p: Point, q: Point, r: Point) -> int:
    """
    Sign of the cross product (q - p) x (r - p).

    Returns:
        +1 for a counter-clockwise turn, -1 for clockwise, 0 when collinear
        within tolerance
    """
    return cross_sign(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y)


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Optional[Tuple[float, float]]:
    """
    Parameters (t, u) with p1 + t (p2 - p1) = q1 + u (q2 - q1).

    Returns None for parallel lines.
    """
    dx1, dy1 = p2.x - p1.x, p2.y - p1.y
    dx2, dy2 = q2.x - q1.x, q2.y - q1.y
    denom = dx1 * dy2 - dy1 * dx2
    if abs(denom) <= get_tolerance() * max(1.0, math.hypot(dx1, dy1) * math.hypot(dx2, dy2)):
        return None
    wx, wy = q1.x - p1.x, q1.y - p1.y
    t = (wx * dy2 - wy * dx2) / denom
    u = (wx * dy1 - wy * dx1) / denom
    return t, u


def polygon_perimeter(pts: Sequence[Point]) -> float:
    """Sum of edge lengths of the closed cycle through pts."""
    if len(pts) < 2:
        raise TooFewPointsError(count=len(pts), required=2)
    return sum(pts[i].distance_to(pts[(i + 1) % len(pts)]) for i in range(len(pts)))


def signed_area(pts: Sequence[Point]) -> float:
    """Shoelace signed area, positive for counter-clockwise cycles."""
    total = 0.0
    for i in range(len(pts)):
        a, b = pts[i], pts[(i + 1) % len(pts)]
        total += a.x * b.y - b.x * a.y
    return total / 2.0


def polygon_area(pts: Sequence[Point]) -> float:
    """Absolute shoelace area."""
    if len(pts) < 3:
        raise TooFewPointsError(count=len(pts), required=3)
    return abs(signed_area(pts))


def is_convex(pts: Sequence[Point], allow_collinear: bool = False) -> bool:
    """
    True iff the cycle pts is a convex polygon.

    All turns must share one sign and the cycle must wind exactly once.
    Collinear triples are accepted only with ``allow_collinear``.
    """
    n = len(pts)
    if n < 3:
        raise TooFewPointsError(count=n, required=3)

    turn = 0
    winding = 0.0
    for i in range(n):
        a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
        s = orientation(a, b, c)
        if s == 0:
            if not allow_collinear:
                return False
        elif turn == 0:
            turn = s
        elif s != turn:
            return False
        e1 = b - a
        e2 = c - b
        winding += math.atan2(e1.x * e2.y - e1.y * e2.x, e1.x * e2.x + e1.y * e2.y)

    if turn == 0:
        return False
    return abs(abs(winding) - 2.0 * math.pi) < 1e-6


def convex_hull(points: Iterable[Point]) -> List[Point]:
    """
    Strict convex hull (monotone chain), counter-clockwise.

    Collinear boundary points are dropped; duplicates collapse.
    """
    unique: List[Point] = []
    for p in sorted(points, key=Point.key):
        if not unique or not unique[-1].close_to(p):
            unique.append(p)
    if len(unique) <= 2:
        return unique

    lower: List[Point] = []
    for p in unique:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(unique):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def in_convex_position(points: Sequence[Point]) -> bool:
    """True iff every point is a strict vertex of the hull of the set."""
    if len(points) < 3:
        return False
    return len(convex_hull(points)) == len(points)


def hull_measure(points: Iterable[Point], measure: str) -> float:
    """Perimeter or area of the convex hull of points (0 for < 2 / < 3 points)."""
    hull = convex_hull(points)
    if measure == "area":
        return polygon_area(hull) if len(hull) >= 3 else 0.0
    return polygon_perimeter(hull) if len(hull) >= 2 else 0.0


def polygon_measure(pts: Sequence[Point], measure: str) -> float:
    """Dispatch on measure name: perimeter, area or length."""
    if measure == "area":
        return polygon_area(pts)
    if measure == "length":
        if len(pts) != 2:
            raise TooFewPointsError(message="length needs exactly two points", count=len(pts))
        return pts[0].distance_to(pts[1])
    return polygon_perimeter(pts)


def lexicographic_key(pts: Sequence[Point]) -> Tuple[Tuple[float, float], ...]:
    """Tie-break key: the sorted vertex list."""
    return tuple(sorted(p.key() for p in pts))
