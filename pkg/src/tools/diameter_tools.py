"""
Diameter tool.

Wraps ``compute_diameter`` into a ResultRecord dictionary.
"""

from typing import Any, Dict, Optional
import asyncio
import logging
import time

from ..algorithms.diameter import compute_diameter
from ..algorithms.oracle import oracle_diameter
from ..config import Config
from ..geometry.primitives import polygon_measure
from ..geometry.terrain import Terrain
from ..schemas.geometry_schemas import ConfigEcho, ResultRecord
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


def elapsed_ms(start: float) -> int:
    return int(round((time.perf_counter() - start) * 1000))


async def diameter_result(
    terrain: Terrain,
    oracle: bool = False,
    delta: Optional[float] = None,
    notice: Optional[str] = None,
    k: Optional[int] = None
) -> Dict[str, Any]:
    """
    Longest segment inside the terrain.

    Args:
        terrain: Validated terrain
        oracle: Also run the brute-force diameter oracle
        delta: Oracle sample spacing (default Config.ORACLE_DELTA)
        notice: Routing message to carry in the record
        k: Requested k when routed from the k-gon command

    Returns:
        ResultRecord as a dictionary

    Example:
        >>> record = await diameter_result(build_terrain([(0, 0), (1, 2), (2, 0)]))
        >>> round(record["value"], 7)
        2.236068
    """
    start = time.perf_counter()
    chord = await asyncio.to_thread(compute_diameter, terrain)
    pts = [chord.seg.a, chord.seg.b]

    record: Dict[str, Any] = {
        "problem": "diameter",
        "measure": "length",
        "value": polygon_measure(pts, "length"),
        "vertices": [p.as_tuple() for p in pts],
        "config": ConfigEcho(k=k, tolerance=get_tolerance()),
        "notice": notice,
    }
    if oracle:
        delta = delta or Config.ORACLE_DELTA
        record["oracle_value"] = await asyncio.to_thread(oracle_diameter, terrain, delta)
        record["oracle_delta"] = delta
        logger.info(f"Oracle diameter {record['oracle_value']:.6f} (delta={delta:g})")

    record["wall_time_ms"] = elapsed_ms(start)
    return ResultRecord(**record).model_dump()
