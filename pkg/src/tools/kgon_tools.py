"""
Approximate k-gon tool.

k = 2 is answered by the diameter; k >= 3 runs the grid approximation.
"""

from typing import Any, Dict, List, Optional
import asyncio
import logging
import time

from pydantic import ValidationError

from .diameter_tools import diameter_result, elapsed_ms
from ..algorithms.fptas_kgon import (
    approximate_largest_kgon,
    area_epsilon,
    seed_scale,
)
from ..algorithms.grid import GridCell, build_grid
from ..algorithms.oracle import solve_oracle_kgon
from ..config import Config
from ..geometry.primitives import polygon_measure
from ..geometry.terrain import Terrain
from ..schemas.geometry_schemas import ApproxConfig, ConfigEcho, ResultRecord
from ..utils.error_handler import (
    InfeasibleConfigError,
    InfeasibleKError,
    UnsupportedMeasureError,
)
from ..utils.predicates import get_tolerance

logger = logging.getLogger(__name__)


def make_config(
    k: int,
    epsilon: float = Config.DEFAULT_EPSILON,
    measure: str = "perimeter",
    tiny_fraction: Optional[float] = None
) -> ApproxConfig:
    """
    Validate approximation settings.

    Raises:
        InfeasibleConfigError: settings rejected by ApproxConfig
    """
    try:
        return ApproxConfig(k=k, epsilon=epsilon, measure=measure, tiny_fraction=tiny_fraction)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise InfeasibleConfigError(
            message=f"Invalid {field}: {first['msg']}",
            details=f"input: {first.get('input')!r}"
        ) from e


def grid_for(T: Terrain, cfg: ApproxConfig) -> List[GridCell]:
    """The grid the approximation lays over T, for rendering."""
    eps_eff = cfg.epsilon if cfg.measure == "perimeter" else area_epsilon(cfg.epsilon)
    return build_grid(T, cfg.k, eps_eff / 2.0, seed_scale(T, cfg.k))


async def kgon_result(
    terrain: Terrain,
    k: int,
    epsilon: float = Config.DEFAULT_EPSILON,
    measure: str = "perimeter",
    oracle: bool = False,
    delta: Optional[float] = None,
    tiny_fraction: Optional[float] = None
) -> Dict[str, Any]:
    """
    Approximate the largest convex polygon with at most k vertices.

    Args:
        terrain: Validated terrain
        k: Vertex budget (k = 2 routes to the diameter)
        epsilon: Approximation parameter in (0, 1)
        measure: "perimeter" or "area"
        oracle: Also run the brute-force oracle with the same k and measure
        delta: Oracle sample spacing
        tiny_fraction: Tiny sub-interval fraction (default 1/(8k))

    Returns:
        ResultRecord as a dictionary

    Raises:
        InfeasibleKError: k < 2
        UnsupportedMeasureError: measure not perimeter or area
        InfeasibleConfigError: epsilon or tiny_fraction invalid
    """
    if k < 2:
        raise InfeasibleKError(message=f"k must be at least 2, got {k}", k=k)
    if k == 2:
        logger.info("k = 2 answered by the terrain diameter")
        return await diameter_result(
            terrain,
            oracle=oracle,
            delta=delta,
            notice="k = 2: the answer is the terrain diameter",
            k=2
        )

    if measure not in ("perimeter", "area"):
        raise UnsupportedMeasureError(
            message=f"k-gon measure must be perimeter or area, not {measure!r}",
            measure=measure
        )
    cfg = make_config(k, epsilon, measure, tiny_fraction)
    start = time.perf_counter()
    poly = await asyncio.to_thread(approximate_largest_kgon, terrain, cfg)

    record: Dict[str, Any] = {
        "problem": "kgon",
        "measure": cfg.measure,
        "value": polygon_measure(poly.vertices, cfg.measure),
        "vertices": [p.as_tuple() for p in poly.vertices],
        "config": ConfigEcho(
            k=cfg.k,
            epsilon=cfg.epsilon,
            tie_break=cfg.tie_break,
            tolerance=get_tolerance()
        ),
    }
    if oracle:
        delta = delta or Config.ORACLE_DELTA
        ref = await asyncio.to_thread(solve_oracle_kgon, terrain, cfg.k, delta, cfg.measure)
        record["oracle_value"] = ref.value
        record["oracle_delta"] = ref.delta
        if record["value"] < (1.0 - cfg.epsilon) * ref.value - get_tolerance():
            logger.warning(
                f"Approximation {record['value']:.6f} below (1 - epsilon) * oracle {ref.value:.6f}"
            )

    record["wall_time_ms"] = elapsed_ms(start)
    return ResultRecord(**record).model_dump()
