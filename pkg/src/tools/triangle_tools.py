"""
Exact triangle tool.
"""

from typing import Any, Dict, Optional
import asyncio
import logging
import time

from .diameter_tools import elapsed_ms
from ..algorithms.oracle import solve_oracle_kgon
from ..algorithms.triangle_exact import largest_perimeter_triangle
from ..config import Config
from ..geometry.primitives import polygon_measure
from ..geometry.terrain import Terrain
from ..schemas.geometry_schemas import ConfigEcho, ResultRecord
from ..utils.error_handler import UnsupportedMeasureError
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


async def triangle_result(
    terrain: Terrain,
    measure: str = "perimeter",
    oracle: bool = False,
    delta: Optional[float] = None
) -> Dict[str, Any]:
    """
    Exact largest-perimeter triangle inside the terrain.

    The search runs in a worker thread; ties go to the lexicographically
    smallest vertex list.

    Args:
        terrain: Validated terrain
        measure: Only "perimeter" is supported
        oracle: Also run the brute-force k=3 oracle
        delta: Oracle sample spacing

    Returns:
        ResultRecord as a dictionary

    Raises:
        UnsupportedMeasureError: measure other than perimeter
    """
    if measure != "perimeter":
        raise UnsupportedMeasureError(
            message=f"The exact triangle supports the perimeter measure only, not {measure!r}",
            measure=measure
        )

    start = time.perf_counter()
    best = await asyncio.to_thread(largest_perimeter_triangle, terrain)

    record: Dict[str, Any] = {
        "problem": "triangle",
        "measure": "perimeter",
        "value": polygon_measure(best.vertices, "perimeter"),
        "vertices": [p.as_tuple() for p in best.vertices],
        "config": ConfigEcho(k=3, tolerance=get_tolerance()),
    }
    if oracle:
        delta = delta or Config.ORACLE_DELTA
        ref = await asyncio.to_thread(solve_oracle_kgon, terrain, 3, delta, "perimeter")
        record["oracle_value"] = ref.value
        record["oracle_delta"] = ref.delta

    record["wall_time_ms"] = elapsed_ms(start)
    return ResultRecord(**record).model_dump()
