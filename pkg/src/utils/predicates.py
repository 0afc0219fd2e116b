"""
Tolerance layer for every geometric comparison.

All sign decisions and on-boundary tests go through this module so the
tolerance can be changed in one place.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator
import logging
import math

from ..config import Config

logger = logging.getLogger(__name__)

_tolerance: ContextVar[float] = ContextVar("terrain_tolerance", default=Config.TOLERANCE)


def get_tolerance() -> float:
    """Tolerance of the current context."""
    return _tolerance.get()


def check_tolerance(value: float) -> float:
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"tolerance must be positive and finite, got {value}")
    return value


@contextmanager
def tolerance_scope(value: float) -> Iterator[float]:
    """
    Use another tolerance inside a with-block.

    The value lives in a ContextVar, so threads started through
    asyncio.to_thread and tasks created inside the block see it too.

    Args:
        value: Tolerance, must be positive and finite

    Raises:
        ValueError: value is not positive and finite
    """
    token = _tolerance.set(check_tolerance(value))
    logger.debug(f"Geometric tolerance {value:g} in scope")
    try:
        yield value
    finally:
        _tolerance.reset(token)


def sign(value: float, scale: float = 1.0) -> int:
    """Sign of value, zero when within tolerance scaled by max(1, scale)."""
    tol = get_tolerance() * max(1.0, scale)
    if value > tol:
        return 1
    if value < -tol:
        return -1
    return 0


def cross_sign(ax: float, ay: float, bx: float, by: float) -> int:
    """Sign of the cross product a x b with a length-aware tolerance."""
    scale = math.hypot(ax, ay) * math.hypot(bx, by)
    return sign(ax * by - ay * bx, scale)


def is_zero(value: float) -> bool:
    return abs(value) <= get_tolerance()


def approx_eq(a: float, b: float) -> bool:
    return abs(a - b) <= get_tolerance()


def approx_le(a: float, b: float) -> bool:
    """a <= b up to tolerance."""
    return a <= b + get_tolerance()


def approx_ge(a: float, b: float) -> bool:
    """a >= b up to tolerance."""
    return a + get_tolerance() >= b


def definitely_less(a: float, b: float) -> bool:
    return a < b - get_tolerance()


def definitely_greater(a: float, b: float) -> bool:
    return a > b + get_tolerance()
