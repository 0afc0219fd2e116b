"""
Pydantic schemas for configuration, terrain documents and results.
"""

from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import Config
from ..geometry.primitives import Point, polygon_measure
from ..utils.error_handler import TooFewPointsError

RECOMPUTE_TOLERANCE = 1e-9


# =============================================================================
# Approximation settings
# =============================================================================

class ApproxConfig(BaseModel):
    """Settings of one k-gon approximation run."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(
        ...,
        ge=3,
        description="Maximum number of polygon vertices"
    )
    epsilon: float = Field(
        Config.DEFAULT_EPSILON,
        gt=0.0,
        lt=1.0,
        description="Approximation parameter; result >= (1 - epsilon) * optimum"
    )
    measure: Literal["perimeter", "area"] = Field(
        "perimeter",
        description="Quantity to maximise"
    )
    tiny_fraction: Optional[float] = Field(
        None,
        gt=0.0,
        le=0.25,
        validate_default=True,
        description="Tiny sub-interval length as a fraction of epsilon*scale (default 1/(8k))"
    )
    tie_break: Literal["lexicographic"] = Field(
        "lexicographic",
        description="Tie-break policy among equal-measure polygons"
    )

    @field_validator("tiny_fraction")
    @classmethod
    def default_tiny_fraction(cls, value: Optional[float], info) -> Optional[float]:
        if value is None and "k" in info.data:
            return Config.tiny_fraction_for(info.data["k"])
        return value


# =============================================================================
# Terrain input
# =============================================================================

class TerrainDocument(BaseModel):
    """JSON terrain document: {"vertices": [[x, y], ...]}."""
    vertices: List[Tuple[float, float]] = Field(
        ...,
        description="Chain vertices, left to right"
    )


# =============================================================================
# Results
# =============================================================================

class ConfigEcho(BaseModel):
    """Settings echoed back in every result."""
    k: Optional[int] = None
    epsilon: Optional[float] = None
    tie_break: str = "lexicographic"
    tolerance: float = Config.TOLERANCE


class ResultRecord(BaseModel):
    """Machine-readable result of one CLI run."""
    problem: Literal["diameter", "triangle", "kgon"]
    measure: Literal["perimeter", "area", "length"]
    value: float
    vertices: List[Tuple[float, float]]
    config: ConfigEcho = Field(default_factory=ConfigEcho)
    wall_time_ms: int = Field(0, ge=0)
    oracle_value: Optional[float] = None
    oracle_delta: Optional[float] = None
    notice: Optional[str] = None

    @model_validator(mode="after")
    def value_matches_vertices(self) -> "ResultRecord":
        pts = [Point(x, y) for x, y in self.vertices]
        try:
            recomputed = polygon_measure(pts, self.measure)
        except TooFewPointsError as e:
            raise ValueError(e.message) from e
        if abs(recomputed - self.value) > RECOMPUTE_TOLERANCE:
            raise ValueError(
                f"value {self.value!r} does not match {self.measure} {recomputed!r} of the vertices"
            )
        return self

    def points(self) -> List[Point]:
        return [Point(x, y) for x, y in self.vertices]
