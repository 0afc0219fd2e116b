"""
Custom exception hierarchy for the terrain k-gon toolkit.

Provides user-friendly error messages and CLI exit code mapping.
"""

from typing import Optional


class TerrainError(Exception):
    """Base exception for all terrain k-gon errors."""

    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details
        super().__init__(message)

    def to_dict(self) -> dict:
        """Convert error to dictionary for JSON output."""
        result = {"error": self.__class__.__name__, "message": self.message}
        if self.details:
            result["details"] = self.details
        return result


# =============================================================================
# Validation errors (exit code 2)
# =============================================================================

class TerrainValidationError(TerrainError):
    """Input violates a terrain or polygon invariant."""


class InvalidPointError(TerrainValidationError):
    """
    Coordinate is NaN or infinite.
    """

    def __init__(
        self,
        message: str = "Point coordinates must be finite",
        coordinates: Optional[tuple] = None
    ):
        super().__init__(message)
        self.coordinates = coordinates

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.coordinates is not None:
            result["coordinates"] = list(self.coordinates)
        return result


class TooFewPointsError(TerrainValidationError):
    """
    Fewer points than the operation needs.
    """

    def __init__(
        self,
        message: str = "Too few points",
        count: Optional[int] = None,
        required: Optional[int] = None
    ):
        super().__init__(message)
        self.count = count
        self.required = required

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.count is not None:
            result["count"] = self.count
        if self.required is not None:
            result["required"] = self.required
        return result


class NonMonotoneError(TerrainValidationError):
    """
    Chain x-coordinates are not strictly increasing.
    """

    def __init__(
        self,
        message: str = "Terrain chain must be strictly x-monotone",
        index: Optional[int] = None
    ):
        super().__init__(message)
        self.index = index

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.index is not None:
            result["index"] = self.index
        return result


class UnequalEndHeightsError(TerrainValidationError):
    """
    First and last chain vertices have different heights (tilted base).
    """

    def __init__(
        self,
        message: str = "First and last vertices must have equal y",
        first_y: Optional[float] = None,
        last_y: Optional[float] = None
    ):
        super().__init__(message)
        self.first_y = first_y
        self.last_y = last_y

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.first_y is not None:
            result["first_y"] = self.first_y
        if self.last_y is not None:
            result["last_y"] = self.last_y
        return result


class DegenerateAreaError(TerrainValidationError):
    """
    Every vertex lies on the base; the region has no area.
    """

    def __init__(self, message: str = "Terrain has zero area"):
        super().__init__(message)


class BelowBaseError(TerrainValidationError):
    """
    A chain vertex lies below the base segment.
    """

    def __init__(
        self,
        message: str = "Chain vertex lies below the base",
        index: Optional[int] = None
    ):
        super().__init__(message)
        self.index = index

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.index is not None:
            result["index"] = self.index
        return result


class TerrainParseError(TerrainError):
    """
    Malformed terrain file.
    """

    def __init__(
        self,
        message: str = "Syntax error in terrain file",
        line: Optional[int] = None,
        column: Optional[int] = None
    ):
        super().__init__(message)
        self.line = line
        self.column = column

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.line is not None:
            result["line"] = self.line
        if self.column is not None:
            result["column"] = self.column
        return result


class TerrainIOError(TerrainError):
    """
    File could not be read or written.
    """

    def __init__(
        self,
        message: str = "I/O error",
        path: Optional[str] = None,
        original_error: Optional[str] = None
    ):
        super().__init__(message, details=original_error)
        self.path = path

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.path:
            result["path"] = self.path
        return result


# =============================================================================
# Infeasible configuration (exit code 3)
# =============================================================================

class InfeasibleConfigError(TerrainError):
    """Requested computation cannot be carried out with these parameters."""


class InfeasibleKError(InfeasibleConfigError):
    """
    k outside the supported range for the requested operation.
    """

    def __init__(
        self,
        message: str = "Unsupported number of vertices",
        k: Optional[int] = None
    ):
        super().__init__(message)
        self.k = k

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.k is not None:
            result["k"] = self.k
        return result


class UnsupportedMeasureError(InfeasibleConfigError):
    """
    Measure not available for the requested problem.
    """

    def __init__(
        self,
        message: str = "Unsupported measure",
        measure: Optional[str] = None
    ):
        super().__init__(message)
        self.measure = measure

    def to_dict(self) -> dict:
        result = super().to_dict()
        if self.measure:
            result["measure"] = self.measure
        return result


class NoFeasibleTriangleError(InfeasibleConfigError):
    """Every triangle candidate was degenerate."""

    def __init__(self, message: str = "No non-degenerate triangle found"):
        super().__init__(message)


class NoPolygonFoundError(InfeasibleConfigError):
    """The k-gon search produced no convex polygon."""

    def __init__(self, message: str = "No convex polygon found"):
        super().__init__(message)


EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3


def map_error_to_exit_code(error: Exception) -> int:
    """
    Map exceptions to CLI exit codes.

    Args:
        error: Exception raised while running a command

    Returns:
        2 for validation, parse and I/O errors, 3 for infeasible configurations
    """
    error_mapping = {
        InfeasibleConfigError: EXIT_INFEASIBLE,
        TerrainValidationError: EXIT_VALIDATION,
        TerrainParseError: EXIT_VALIDATION,
        TerrainIOError: EXIT_VALIDATION,
    }
    for error_type, code in error_mapping.items():
        if isinstance(error, error_type):
            return code
    return EXIT_VALIDATION
