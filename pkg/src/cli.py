"""
Terrain k-gon command-line driver.

Run with: terrain-kgon <command> <file> [options]
Or: python -m src.cli <command> <file> [options]

Commands:
    diameter <file>                      longest segment inside the terrain
    triangle <file> [--measure M]        exact largest-perimeter triangle
    kgon <file> -k K --epsilon E --measure perimeter|area
                                         (1 - E)-approximate largest k-gon
    generate -n N [--max-coord M] [--out FILE]
                                         seeded random terrain (text format)

The result is printed to stdout as one JSON ResultRecord; logs go to stderr.
"""

from typing import Any, Dict, List, Optional, Sequence
import argparse
import asyncio
import json
import logging
import sys

import numpy as np

from .config import Config
from .formats.svg_render import render_svg
from .formats.terrain_format import parse_terrain, serialize_terrain, write_terrain
from .geometry.terrain import Terrain
from .schemas.geometry_schemas import ResultRecord
from .tools import diameter_result, grid_for, kgon_result, make_config, triangle_result
from .utils.error_handler import EXIT_OK, TerrainError, TerrainIOError, map_error_to_exit_code
from .utils.predicates import get_tolerance, tolerance_scope
from .utils.terrain_generator import random_terrain

logger = logging.getLogger(__name__)


# =============================================================================
# Argument parsing
# =============================================================================

def _shared_options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--svg", metavar="OUT", help="Write an SVG rendering to OUT")
    shared.add_argument("--json", metavar="OUT", help="Also write the JSON result to OUT")
    shared.add_argument("--oracle", action="store_true", help="Run the brute-force oracle alongside")
    shared.add_argument("--delta", type=float, default=None, help="Oracle sample spacing")
    shared.add_argument("--seed", type=int, default=None, help="Seed for random generation")
    shared.add_argument("--tolerance", type=float, default=None, help="Geometric tolerance")
    shared.add_argument("--grid", action="store_true", help="Overlay the k-gon grid in the SVG")
    return shared


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_options()
    parser = argparse.ArgumentParser(
        prog="terrain-kgon",
        description="Largest inscribed polygons in 1.5D terrains"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("diameter", parents=[shared], help="Terrain diameter")
    p.add_argument("file", help="Terrain file (text or JSON)")

    p = commands.add_parser("triangle", parents=[shared], help="Exact largest-perimeter triangle")
    p.add_argument("file", help="Terrain file (text or JSON)")
    p.add_argument("--measure", default="perimeter")

    p = commands.add_parser("kgon", parents=[shared], help="Approximate largest convex k-gon")
    p.add_argument("file", help="Terrain file (text or JSON)")
    p.add_argument("-k", type=int, default=Config.DEFAULT_K)
    p.add_argument("--epsilon", type=float, default=Config.DEFAULT_EPSILON)
    p.add_argument("--measure", default="perimeter")
    p.add_argument("--tiny-fraction", type=float, default=None)

    p = commands.add_parser("generate", parents=[shared], help="Seeded random terrain")
    p.add_argument("-n", type=int, default=8, help="Number of vertices")
    p.add_argument("--max-coord", type=int, default=20)
    p.add_argument("--out", default=None, help="Terrain file to write (default stdout)")

    return parser


# =============================================================================
# Commands
# =============================================================================

async def _solve(args: argparse.Namespace, terrain: Terrain) -> Dict[str, Any]:
    if args.command == "diameter":
        return await diameter_result(terrain, oracle=args.oracle, delta=args.delta)
    if args.command == "triangle":
        return await triangle_result(terrain, args.measure, oracle=args.oracle, delta=args.delta)
    return await kgon_result(
        terrain,
        k=args.k,
        epsilon=args.epsilon,
        measure=args.measure,
        oracle=args.oracle,
        delta=args.delta,
        tiny_fraction=args.tiny_fraction
    )


def _write_json(record: Dict[str, Any], path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    except OSError as e:
        raise TerrainIOError(
            message=f"Cannot write JSON file {path}",
            path=path,
            original_error=str(e)
        ) from e


def _render(args: argparse.Namespace, terrain: Terrain, record: Dict[str, Any]) -> None:
    grid = None
    if args.grid:
        if args.command == "kgon" and args.k >= 3:
            grid = grid_for(terrain, make_config(args.k, args.epsilon, args.measure, args.tiny_fraction))
        else:
            logger.warning("--grid only applies to kgon with k >= 3; ignored")
    render_svg(terrain, ResultRecord(**record), args.svg, grid=grid)


def _generate(args: argparse.Namespace) -> None:
    terrain = random_terrain(np.random.default_rng(args.seed), args.n, args.max_coord)
    if args.out:
        write_terrain(terrain, args.out)
        logger.info(f"Terrain with {terrain.n} vertices written to {args.out}")
    else:
        sys.stdout.write(serialize_terrain(terrain))


def _configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL.upper(), logging.INFO),
        format=Config.LOG_FORMAT,
        stream=sys.stderr
    )


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and print its result.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Exit code: 0 success, 2 validation error, 3 infeasible configuration
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    tolerance = args.tolerance if args.tolerance is not None else get_tolerance()
    try:
        with tolerance_scope(tolerance):
            return _run(args)
    except TerrainError as e:
        code = map_error_to_exit_code(e)
        logger.error(f"{e.__class__.__name__}: {e.message}")
        print(json.dumps(e.to_dict()), file=sys.stderr)
        return code
    except ValueError as e:
        # tolerance and generator range checks
        logger.error(str(e))
        return map_error_to_exit_code(e)


def _run(args: argparse.Namespace) -> int:
    if args.command == "generate":
        _generate(args)
        return EXIT_OK

    terrain = parse_terrain(args.file)
    record = asyncio.run(_solve(args, terrain))
    print(json.dumps(record, indent=2))
    if args.json:
        _write_json(record, args.json)
    if args.svg:
        _render(args, terrain, record)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> None:
    _configure_logging()
    sys.exit(run_cli(argv))


if __name__ == "__main__":
    main()
