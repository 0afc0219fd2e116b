"""Terrain file formats and SVG output."""

from .terrain_format import parse_terrain, serialize_terrain, write_terrain
from .svg_render import build_svg, render_svg

__all__ = [
    "build_svg",
    "parse_terrain",
    "render_svg",
    "serialize_terrain",
    "write_terrain",
]
