"""
Tests for the tolerance layer and planar primitives.
"""

import asyncio
import math

import numpy as np
import pytest

from src.geometry.primitives import (
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
from src.utils.error_handler import InvalidPointError, TooFewPointsError
from src.utils.predicates import approx_eq, get_tolerance, sign, tolerance_scope


def pts(*coords):
    return [Point(float(x), float(y)) for x, y in coords]


class TestTolerance:
    """Tests for the scoped tolerance."""

    def test_default_tolerance(self):
        """Test the default tolerance is 1e-9."""
        assert get_tolerance() == pytest.approx(1e-9)

    def test_scope_changes_comparisons(self):
        """Test a wider tolerance inside the block only."""
        assert not approx_eq(1.0, 1.0 + 1e-6)
        with tolerance_scope(1e-5):
            assert approx_eq(1.0, 1.0 + 1e-6)
        assert not approx_eq(1.0, 1.0 + 1e-6)
        assert get_tolerance() == pytest.approx(1e-9)

    def test_scope_restored_on_error(self):
        """Test the previous tolerance comes back after an exception."""
        with pytest.raises(RuntimeError):
            with tolerance_scope(1e-3):
                raise RuntimeError("boom")
        assert get_tolerance() == pytest.approx(1e-9)

    @pytest.mark.asyncio
    async def test_scope_reaches_worker_threads(self):
        """Test asyncio.to_thread sees the scoped value."""
        with tolerance_scope(1e-4):
            seen = await asyncio.to_thread(get_tolerance)
        assert seen == pytest.approx(1e-4)

    @pytest.mark.parametrize("bad", [0.0, -1e-9, float("nan"), float("inf")])
    def test_reject_bad_tolerance(self, bad):
        """Test non-positive or non-finite tolerances are rejected."""
        with pytest.raises(ValueError):
            with tolerance_scope(bad):
                pass

    def test_sign_scales(self):
        """Test the zero band grows with scale."""
        assert sign(5e-10) == 0
        assert sign(5e-9) == 1
        assert sign(5e-9, scale=10.0) == 0


class TestPoint:
    """Tests for Point and Segment."""

    def test_rejects_non_finite(self):
        """Test NaN and infinity raise InvalidPointError."""
        with pytest.raises(InvalidPointError):
            Point(float("nan"), 0.0)
        with pytest.raises(InvalidPointError):
            Point(0.0, float("inf"))

    def test_arithmetic(self):
        """Test vector helpers."""
        a, b = Point(1, 2), Point(4, 6)
        assert b - a == Point(3, 4)
        assert a.distance_to(b) == pytest.approx(5.0)
        assert a.scaled(2) == Point(2, 4)

    def test_coincident_segment_needs_flag(self):
        """Test coincident endpoints require the degenerate flag."""
        p = Point(1, 1)
        with pytest.raises(TooFewPointsError):
            Segment(p, p)
        seg = Segment.between(p, p)
        assert seg.degenerate
        assert seg.length == 0.0

    def test_contains_point(self):
        """Test closed-segment membership."""
        seg = Segment(Point(0, 0), Point(2, 2))
        assert seg.contains_point(Point(1, 1))
        assert seg.contains_point(Point(2, 2))
        assert not seg.contains_point(Point(3, 3))
        assert not seg.contains_point(Point(1, 0))


class TestOrientation:
    """Tests for the orientation predicate."""

    def test_counter_clockwise(self):
        """Test the canonical left turn."""
        assert orientation(*pts((0, 0), (1, 0), (0, 1))) == 1

    def test_collinear(self):
        """Test collinear triples give zero."""
        assert orientation(*pts((0, 0), (1, 2), (2, 4))) == 0

    def test_clockwise(self):
        """Test a right turn."""
        assert orientation(*pts((0, 0), (1, 2), (2, 0))) == -1

    def test_line_intersection(self):
        """Test crossing and parallel lines."""
        t, u = line_intersection(*pts((0, 0), (2, 2), (0, 2), (2, 0)))
        assert t == pytest.approx(0.5)
        assert u == pytest.approx(0.5)
        assert line_intersection(*pts((0, 0), (1, 0), (0, 1), (1, 1))) is None


class TestPolygonMeasures:
    """Tests for perimeter, area and convexity."""

    def test_triangle(self):
        """Test the T1 triangle measures."""
        tri = pts((0, 0), (1, 2), (2, 0))
        assert polygon_perimeter(tri) == pytest.approx(2 + 2 * math.sqrt(5), abs=1e-12)
        assert polygon_area(tri) == pytest.approx(2.0)
        assert is_convex(tri)

    def test_square(self):
        """Test the unit square."""
        square = pts((0, 0), (1, 0), (1, 1), (0, 1))
        assert polygon_perimeter(square) == pytest.approx(4.0)
        assert polygon_area(square) == pytest.approx(1.0)
        assert is_convex(square)

    def test_not_convex(self):
        """Test a dart is rejected."""
        assert not is_convex(pts((0, 0), (2, 0), (1, 0.5), (1, 2)))

    def test_collinear_vertex(self):
        """Test collinear vertices need allow_collinear."""
        poly = pts((0, 0), (1, 0), (2, 0), (1, 1))
        assert not is_convex(poly)
        assert is_convex(poly, allow_collinear=True)

    def test_too_few_points(self):
        """Test measures reject short inputs."""
        with pytest.raises(TooFewPointsError):
            polygon_area(pts((0, 0), (1, 1)))
        with pytest.raises(TooFewPointsError):
            polygon_perimeter(pts((0, 0)))
        with pytest.raises(TooFewPointsError):
            polygon_measure(pts((0, 0), (1, 0), (0, 1)), "length")

    def test_measure_dispatch(self):
        """Test polygon_measure by name."""
        seg = pts((0, 0), (3, 4))
        assert polygon_measure(seg, "length") == pytest.approx(5.0)
        tri = pts((0, 0), (1, 2), (2, 0))
        assert polygon_measure(tri, "area") == pytest.approx(2.0)
        assert polygon_measure(tri, "perimeter") == pytest.approx(2 + 2 * math.sqrt(5))


class TestConvexHull:
    """Tests for the monotone-chain hull."""

    def test_drops_interior_and_collinear(self):
        """Test only strict corners survive."""
        hull = convex_hull(pts((0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)))
        assert {p.as_tuple() for p in hull} == {(0, 0), (2, 0), (2, 2), (0, 2)}
        assert is_convex(hull)

    def test_counter_clockwise(self):
        """Test the hull winds counter-clockwise."""
        hull = convex_hull(pts((0, 0), (2, 0), (1, 2)))
        assert orientation(*hull) == 1

    def test_convex_position(self):
        """Test in_convex_position."""
        assert in_convex_position(pts((0, 0), (2, 0), (1, 2)))
        assert not in_convex_position(pts((0, 0), (2, 0), (1, 2), (1, 0.5)))
        assert not in_convex_position(pts((0, 0), (1, 0), (2, 0)))

    def test_hull_measure_small_sets(self):
        """Test hull measures degrade to zero."""
        assert hull_measure(pts((0, 0)), "perimeter") == 0.0
        assert hull_measure(pts((0, 0), (1, 0)), "area") == 0.0

    def test_lexicographic_key(self):
        """Test tie-break key ignores vertex order."""
        a = pts((1, 2), (0, 0), (2, 0))
        b = pts((2, 0), (1, 2), (0, 0))
        assert lexicographic_key(a) == lexicographic_key(b)


class TestSimilarTriangles:
    """Area of similar triangles scales with the square of the side ratio."""

    def test_area_ratio(self):
        """Test 1000 random similar pairs."""
        rng = np.random.default_rng(11)
        for _ in range(1000):
            coords = rng.uniform(-10, 10, size=(3, 2))
            tri = [Point(x, y) for x, y in coords]
            if polygon_area(tri) < 1e-3:
                continue
            eps = rng.uniform(0.01, 0.99)
            center = Point(*rng.uniform(-5, 5, size=2))
            small = [center + (p - center).scaled(1 - eps) for p in tri]
            ratio = polygon_area(small) / polygon_area(tri)
            assert ratio == pytest.approx((1 - eps) ** 2, abs=1e-9)
