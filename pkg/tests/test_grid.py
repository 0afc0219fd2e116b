"""
Tests for the big/fine cell grid and boundary intervals.
"""

import math

import pytest

from src.algorithms.fptas_kgon import seed_scale
from src.algorithms.grid import (
    CellLevel,
    CellSide,
    GridCell,
    big_cells,
    build_grid,
    extract_intervals,
    fine_cells,
    intervals_by_side,
    is_boundary_cell,
)
from src.algorithms.triangle_exact import largest_perimeter_triangle
from src.geometry.primitives import Point
from src.geometry.terrain import build_terrain, point_in_terrain


def fine(cell_id, x, y, side):
    return GridCell(cell_id=cell_id, origin=Point(x, y), side=side, level=CellLevel.FINE, parent=0)


class TestBuildGrid:
    """Tests for build_grid."""

    def test_big_cells(self, t3):
        """Test big cell size and origins."""
        cells = build_grid(t3, k=3, epsilon=0.1, scale=8.0)
        big = big_cells(cells)
        assert [c.cell_id for c in big] == [0, 1, 2, 3]
        assert all(c.side == pytest.approx(48.0) for c in big)
        assert [c.origin.as_tuple() for c in big] == [(0.0, 0.0), (24.0, 0.0), (0.0, 24.0), (24.0, 24.0)]
        x0, y0, x1, y1 = t3.bbox()
        assert big[0].contains(Point(x0, y0)) and big[0].contains(Point(x1, y1))

    def test_big_cells_cover_chain(self, t1, t2, t3):
        """Test every chain vertex lies in some big cell."""
        for T in (t1, t2, t3):
            cells = build_grid(T, 4, 0.25, seed_scale(T, 4))
            for v in T.chain:
                assert any(c.contains(v) for c in big_cells(cells))

    def test_fine_cells(self, t1):
        """Test fine side and retained count on T1."""
        scale = 2 * math.sqrt(5)
        cells = build_grid(t1, k=3, epsilon=0.5, scale=scale)
        kept = fine_cells(cells)
        assert 1 <= len(kept) <= 9
        assert all(c.side == pytest.approx(math.sqrt(5)) for c in kept)
        assert all(c.level == CellLevel.FINE and c.parent is not None for c in kept)

    def test_fine_cells_meet_region(self, t3):
        """Test every retained fine cell meets the region."""
        for c in fine_cells(build_grid(t3, 3, 0.5, 2.0)):
            assert c.origin.x <= t3.x_max and c.x_max >= t3.x_min
            assert c.origin.y <= t3.max_height(c.origin.x, c.x_max) + 1e-9

    def test_bad_scale(self, t1):
        """Test non-positive scale is rejected."""
        with pytest.raises(ValueError):
            build_grid(t1, 3, 0.5, 0.0)

    def test_optimal_triangle_in_big_cell(self, t1, t2, t3):
        """Test the exact optimum fits inside a single big cell."""
        for T in (t1, t2, t3):
            cells = build_grid(T, 3, 0.25, seed_scale(T, 3))
            tri = largest_perimeter_triangle(T)
            assert any(all(c.contains(p) for p in tri.vertices) for c in big_cells(cells))


class TestExtractIntervals:
    """Tests for boundary interval extraction."""

    def test_cell_inside(self, t3):
        """Test a cell inside the region gives four full sides."""
        cell = fine(10, 0.9, 0.1, 0.3)
        intervals = extract_intervals(t3, [cell])
        assert len(intervals) == 4
        assert {iv.side for iv in intervals} == set(CellSide)
        assert all(iv.length == pytest.approx(0.3) for iv in intervals)
        assert not is_boundary_cell(t3, cell)

    def test_cell_outside(self, t3):
        """Test a cell above the valley gives nothing."""
        assert extract_intervals(t3, [fine(11, 1.8, 2.5, 0.3)]) == []

    def test_side_crossing_chain(self, t1):
        """Test the top side of the unit cell is cut where it meets the chain."""
        cell = fine(12, 0.0, 0.0, 1.0)
        by_side = intervals_by_side(extract_intervals(t1, [cell]))
        north = by_side[(12, CellSide.N)]
        assert len(north) == 1
        assert north[0].seg.a.as_tuple() == pytest.approx((0.5, 1.0))
        assert north[0].seg.b.as_tuple() == pytest.approx((1.0, 1.0))
        assert is_boundary_cell(t1, cell)

    def test_base_cell_is_boundary(self, t3):
        """Test a cell resting on the base counts as a boundary cell."""
        assert is_boundary_cell(t3, fine(14, 0.9, 0.0, 0.3))
        assert not is_boundary_cell(t3, fine(15, 0.9, 0.05, 0.3))

    def test_base_corner_cells(self):
        """Test every fine cell holding a base point is a boundary cell."""
        T = build_terrain([(0, 0), (1, 6), (2, 16), (5, 6), (11, 13), (13, 2), (14, 17), (15, 0)])
        corner = Point(13.364, 0.0)
        cells = build_grid(T, 3, 0.1, seed_scale(T, 3))
        holding = [c for c in fine_cells(cells) if c.contains(corner)]
        assert holding
        assert all(is_boundary_cell(T, c) for c in holding)

    def test_intervals_inside_region(self, t3):
        """Test interval endpoints lie in the region and on their cell."""
        cells = build_grid(t3, 3, 0.5, 2.0)
        by_id = {c.cell_id: c for c in cells}
        for iv in extract_intervals(t3, cells):
            for p in iv.endpoints():
                assert point_in_terrain(t3, p)
                assert by_id[iv.cell_id].contains(p)

    def test_ordered_along_side(self, t3):
        """Test the two peaks split the top side of a wide cell."""
        cell = fine(13, 0.0, 1.0, 4.0)
        by_side = intervals_by_side(extract_intervals(t3, [cell]))
        south = by_side[(13, CellSide.S)]
        assert [iv.index for iv in south] == [0, 1]
        assert south[0].end < south[1].start
