"""
Tests for terrain construction and containment queries.
"""

import logging
import math

import numpy as np
import pytest

from src.geometry.primitives import Point, Segment, polygon_area
from src.geometry.terrain import (
    VertexKind,
    build_terrain,
    classify_vertices,
    point_in_terrain,
    prolong_chord,
    reflex_indices,
    segment_in_terrain,
    visible,
)
from src.utils.terrain_generator import terrain_batch
from src.utils.error_handler import (
    BelowBaseError,
    DegenerateAreaError,
    InvalidPointError,
    NonMonotoneError,
    TooFewPointsError,
    UnequalEndHeightsError,
)


class TestBuildTerrain:
    """Tests for build_terrain validation."""

    def test_single_peak(self, t1):
        """Test a valid three-vertex terrain."""
        assert t1.n == 3
        assert t1.base.a == Point(0, 0)
        assert t1.base.b == Point(2, 0)
        assert t1.area == pytest.approx(2.0)

    def test_non_monotone(self):
        """Test repeated x is rejected."""
        with pytest.raises(NonMonotoneError) as exc:
            build_terrain([(0, 0), (1, 2), (1, 3)])
        assert exc.value.index == 2

    def test_unequal_end_heights(self):
        """Test a tilted base is rejected."""
        with pytest.raises(UnequalEndHeightsError):
            build_terrain([(0, 0), (1, 2), (2, 1)])

    def test_below_base(self):
        """Test a vertex under the base is rejected."""
        with pytest.raises(BelowBaseError) as exc:
            build_terrain([(0, 1), (1, 0), (2, 1)])
        assert exc.value.index == 1

    def test_zero_area(self):
        """Test a flat chain is rejected."""
        with pytest.raises(DegenerateAreaError):
            build_terrain([(0, 0), (1, 0), (2, 0)])

    def test_too_few_points(self):
        """Test fewer than three vertices."""
        with pytest.raises(TooFewPointsError):
            build_terrain([(0, 0), (1, 1)])

    def test_non_finite(self):
        """Test NaN coordinates."""
        with pytest.raises(InvalidPointError):
            build_terrain([(0, 0), (1, float("nan")), (2, 0)])

    def test_base_translated_to_zero(self):
        """Test the base is moved to y = 0."""
        T = build_terrain([(0, 5), (1, 7), (2, 5)])
        assert T.ys == (0.0, 2.0, 0.0)

    def test_pinched_vertex_warns(self, caplog):
        """Test interior vertices on the base are accepted and flagged."""
        with caplog.at_level(logging.WARNING):
            T = build_terrain([(0, 0), (1, 2), (2, 0), (3, 2), (4, 0)])
        assert T.pinched == (2,)
        assert "touch the base" in caplog.text

    def test_error_to_dict(self):
        """Test errors serialise with their fields."""
        with pytest.raises(NonMonotoneError) as exc:
            build_terrain([(0, 0), (1, 2), (1, 3)])
        data = exc.value.to_dict()
        assert data["error"] == "NonMonotoneError"
        assert data["index"] == 2


class TestClassifyVertices:
    """Tests for convex/reflex labelling."""

    def test_single_peak(self, t1):
        """Test T1 labels."""
        kinds = [c.kind for c in classify_vertices(t1)]
        assert kinds == [VertexKind.ENDPOINT, VertexKind.CONVEX, VertexKind.ENDPOINT]

    def test_valley(self, t3):
        """Test the valley vertex is reflex."""
        kinds = [c.kind for c in classify_vertices(t3)]
        assert kinds[1] == VertexKind.CONVEX
        assert kinds[2] == VertexKind.REFLEX
        assert kinds[3] == VertexKind.CONVEX
        assert reflex_indices(t3) == [2]

    def test_flat_top(self, flat_top):
        """Test both top vertices are convex."""
        kinds = [c.kind for c in classify_vertices(flat_top)]
        assert kinds[1:3] == [VertexKind.CONVEX, VertexKind.CONVEX]


class TestHeights:
    """Tests for height and level queries."""

    def test_height_at(self, t1):
        """Test interpolation and out-of-range heights."""
        assert t1.height_at(0.5) == pytest.approx(1.0)
        assert t1.height_at(1.0) == pytest.approx(2.0)
        assert t1.height_at(3.0) == -math.inf

    def test_superlevel_intervals(self, t3):
        """Test the two peaks above y = 1."""
        ranges = t3.superlevel_intervals(1.0, 0.0, 4.0)
        assert len(ranges) == 2
        assert ranges[0] == pytest.approx((1 / 3, 1.8))
        assert ranges[1] == pytest.approx((2.2, 11 / 3))

    def test_reach_on_base(self, t1, t3):
        """Test the base portion seen from an interior point."""
        assert t1.reach_on_base(Point(1, 1)) == (0.0, 2.0, 0, 2)
        left, right, ls, rs = t3.reach_on_base(Point(1, 3))
        assert left == pytest.approx(0.0)
        assert right == pytest.approx(2.2)
        assert (ls, rs) == (0, 2)


class TestContainment:
    """Tests for point and segment containment."""

    def test_point_in_terrain(self, t1):
        """Test interior, exterior and boundary points."""
        assert point_in_terrain(t1, Point(1, 1))
        assert not point_in_terrain(t1, Point(1, 2.5))
        assert point_in_terrain(t1, Point(0.5, 1))

    def test_segment_in_terrain(self, t1, t3):
        """Test horizontal segments over a peak and a valley."""
        assert segment_in_terrain(t1, Segment(Point(0.5, 0.5), Point(1.5, 0.5)))
        assert not segment_in_terrain(t3, Segment(Point(0.5, 1), Point(3.5, 1)))
        assert segment_in_terrain(t3, Segment(Point(0.5, 0.1), Point(3.5, 0.1)))

    def test_visible(self, t1, t3):
        """Test mutual visibility."""
        assert visible(t1, Point(0, 0), Point(1, 2))
        assert not visible(t3, Point(1, 3), Point(3, 3))
        assert visible(t3, Point(0, 0), Point(4, 0))

    def test_touching_reflex_vertex(self, t3):
        """Test a segment grazing the valley vertex stays inside."""
        assert visible(t3, Point(1, 0.5), Point(3, 0.5))


class TestProlongChord:
    """Tests for maximal extension along a line."""

    def test_horizontal_in_peak(self, t1):
        """Test the y = 0.5 chord of T1."""
        seg = prolong_chord(t1, Point(0.5, 0.5), Point(1.5, 0.5))
        assert seg.a.x == pytest.approx(0.25)
        assert seg.b.x == pytest.approx(1.75)
        assert seg.a.y == pytest.approx(0.5)

    def test_base_is_maximal(self, t1):
        """Test the base does not grow."""
        seg = prolong_chord(t1, Point(0, 0), Point(2, 0))
        assert seg.a == Point(0, 0)
        assert seg.b == Point(2, 0)

    def test_clipped_on_valley_edge(self, t3):
        """Test the line y = x stops on the edge towards the valley."""
        seg = prolong_chord(t3, Point(0, 0), Point(1, 1))
        assert seg.a.as_tuple() == pytest.approx((0.0, 0.0))
        assert seg.b.as_tuple() == pytest.approx((11 / 7, 11 / 7))

    def test_blocked_pair(self, t3):
        """Test invisible pairs have no chord."""
        assert prolong_chord(t3, Point(1, 3), Point(3, 3)) is None


def sample_points(T, rng, count):
    """Uniform x, then uniform height under the chain."""
    points = []
    for _ in range(count):
        x = float(rng.uniform(T.x_min, T.x_max))
        points.append(Point(x, float(rng.uniform(0.0, T.height_at(x)))))
    return points


def on_boundary(T, p, tol=1e-6):
    return (
        abs(p.y) <= tol
        or abs(p.y - T.height_at(p.x)) <= tol
        or abs(p.x - T.x_min) <= tol
        or abs(p.x - T.x_max) <= tol
    )


def convex_terrain(n):
    """Every interior vertex convex: heights on a downward parabola."""
    return build_terrain([(float(i), float(i * (n - 1 - i))) for i in range(n)])


@pytest.fixture
def property_terrains():
    return list(terrain_batch(7, count=20, n_min=4, n_max=10))


class TestRandomTerrainProperties:
    """Properties that hold on every terrain, checked on random samples."""

    def test_visibility_symmetric(self, property_terrains):
        """Test visible(p, q) equals visible(q, p)."""
        rng = np.random.default_rng(1)
        for T in property_terrains:
            pts = sample_points(T, rng, 12) + list(T.chain)
            for p in pts:
                for q in pts:
                    assert visible(T, p, q) == visible(T, q, p)

    def test_downward_closed(self, property_terrains):
        """Test every point below a region point is in the region."""
        rng = np.random.default_rng(2)
        for T in property_terrains:
            for p in sample_points(T, rng, 50):
                assert point_in_terrain(T, p)
                for t in (0.0, 0.3, 0.7):
                    assert point_in_terrain(T, Point(p.x, t * p.y))

    def test_prolonged_chord_contains_pair(self, property_terrains):
        """Test the prolonged chord covers the pair and ends on the boundary."""
        rng = np.random.default_rng(3)
        checked = 0
        for T in property_terrains:
            pts = sample_points(T, rng, 16)
            for p, q in zip(pts[::2], pts[1::2]):
                seg = prolong_chord(T, p, q)
                if seg is None:
                    assert not visible(T, p, q)
                    continue
                checked += 1
                lo, hi = sorted((seg.a.x, seg.b.x))
                for r in (p, q):
                    assert lo - 1e-9 <= r.x <= hi + 1e-9
                    cross = (seg.b.x - seg.a.x) * (r.y - seg.a.y) - (seg.b.y - seg.a.y) * (r.x - seg.a.x)
                    assert abs(cross) <= 1e-6 * max(seg.length, 1.0)
                assert on_boundary(T, seg.a)
                assert on_boundary(T, seg.b)
        assert checked > 0

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_convex_terrain_sees_everything(self, n):
        """Test all pairs are mutually visible when no vertex is reflex."""
        T = convex_terrain(n)
        assert reflex_indices(T) == []
        rng = np.random.default_rng(n)
        pts = sample_points(T, rng, 20) + list(T.chain)
        for p in pts:
            for q in pts:
                assert visible(T, p, q)

    def test_area_matches_trapezoids(self, property_terrains):
        """Test the shoelace area equals the sum of edge trapezoids."""
        for T in property_terrains:
            trapezoids = sum(
                (b.x - a.x) * (a.y + b.y) / 2.0
                for a, b in zip(T.chain, T.chain[1:])
            )
            assert T.area == pytest.approx(trapezoids, rel=1e-12)
            assert polygon_area(T.chain) == pytest.approx(trapezoids, rel=1e-12)
