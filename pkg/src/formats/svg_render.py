"""
SVG rendering of a terrain and a result.

The terrain is a filled <polygon>, a polygon result a stroked <path>, and a
two-point result (the diameter) a <line>. An optional grid overlay adds
one more <path> holding every fine cell. The y axis is flipped so the
picture reads upward.
"""

from pathlib import Path
from typing import Iterable, Optional, Sequence, Tuple, Union
import logging
import xml.etree.ElementTree as ET

from ..algorithms.grid import CellLevel, GridCell
from ..config import Config
from ..geometry.terrain import Terrain
from ..schemas.geometry_schemas import ResultRecord
from ..utils.error_handler import TerrainIOError

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(value: float) -> str:
    return f"{value + 0.0:.6g}"


def _path_data(points: Sequence[Tuple[float, float]], closed: bool = True) -> str:
    head, *rest = points
    parts = [f"M {_fmt(head[0])} {_fmt(-head[1])}"]
    parts += [f"L {_fmt(x)} {_fmt(-y)}" for x, y in rest]
    if closed:
        parts.append("Z")
    return " ".join(parts)


def _points_attr(points: Sequence[Tuple[float, float]]) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in points)


def view_box(T: Terrain, padding: float = Config.SVG_PADDING) -> Tuple[float, float, float, float]:
    """Terrain bbox padded on every side, in flipped-y SVG coordinates."""
    x0, y0, x1, y1 = T.bbox()
    px = (x1 - x0) * padding
    py = (y1 - y0) * padding
    return (x0 - px, -(y1 + py), (x1 - x0) + 2 * px, (y1 - y0) + 2 * py)


def build_svg(
    T: Terrain,
    result: ResultRecord,
    grid: Optional[Iterable[GridCell]] = None
) -> ET.Element:
    """Assemble the SVG element tree."""
    ET.register_namespace("", SVG_NS)
    vb = view_box(T)
    stroke = max(vb[2], vb[3]) * 0.004
    root = ET.Element(f"{{{SVG_NS}}}svg", {
        "version": "1.1",
        "viewBox": " ".join(_fmt(v) for v in vb),
    })

    ET.SubElement(root, f"{{{SVG_NS}}}polygon", {
        "class": "terrain",
        "points": _points_attr([p.as_tuple() for p in T.chain]),
        "fill": "#d9c7a3",
        "stroke": "#6b5a3a",
        "stroke-width": _fmt(stroke),
    })

    if grid is not None:
        squares = [
            _path_data([(c.origin.x, c.origin.y), (c.x_max, c.origin.y),
                        (c.x_max, c.y_max), (c.origin.x, c.y_max)])
            for c in grid if c.level == CellLevel.FINE
        ]
        ET.SubElement(root, f"{{{SVG_NS}}}path", {
            "class": "grid",
            "d": " ".join(squares),
            "fill": "none",
            "stroke": "#9aa5b1",
            "stroke-width": _fmt(stroke / 2),
        })

    if len(result.vertices) == 2:
        (ax, ay), (bx, by) = result.vertices
        ET.SubElement(root, f"{{{SVG_NS}}}line", {
            "class": "result",
            "x1": _fmt(ax), "y1": _fmt(-ay),
            "x2": _fmt(bx), "y2": _fmt(-by),
            "stroke": "#c0392b",
            "stroke-width": _fmt(stroke * 1.5),
        })
    else:
        ET.SubElement(root, f"{{{SVG_NS}}}path", {
            "class": "result",
            "d": _path_data(result.vertices),
            "fill": "none",
            "stroke": "#c0392b",
            "stroke-width": _fmt(stroke * 1.5),
        })
    return root


def render_svg(
    T: Terrain,
    result: ResultRecord,
    path: Union[str, Path],
    grid: Optional[Iterable[GridCell]] = None
) -> None:
    """
    Write the terrain and result as an SVG 1.1 file.

    Raises:
        TerrainIOError: file cannot be written
    """
    root = build_svg(T, result, grid)
    try:
        ET.ElementTree(root).write(str(path), encoding="utf-8", xml_declaration=True)
    except OSError as e:
        raise TerrainIOError(
            message=f"Cannot write SVG file {path}",
            path=str(path),
            original_error=str(e)
        ) from e
    logger.info(f"SVG written to {path}")
