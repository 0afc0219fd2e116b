"""
Configuration management for the terrain k-gon toolkit.

Handles environment variables, numeric tolerances and search defaults.
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Config:
    """Central configuration for the terrain k-gon toolkit."""

    # Global geometric tolerance (tau) for orientation ties and boundary tests
    TOLERANCE: float = float(os.getenv("TERRAIN_TOLERANCE", "1e-9"))
    ANGLE_TOLERANCE: float = float(os.getenv("TERRAIN_ANGLE_TOLERANCE", "1e-7"))

    # Exact triangle: apex scan along chain edges
    APEX_SCAN_STEP: float = float(os.getenv("TERRAIN_APEX_SCAN_STEP", "1e-4"))
    APEX_REFINE_TOLERANCE: float = float(os.getenv("TERRAIN_APEX_REFINE_TOL", "1e-10"))

    # k-gon approximation defaults
    DEFAULT_EPSILON: float = float(os.getenv("KGON_DEFAULT_EPSILON", "0.25"))
    DEFAULT_K: int = int(os.getenv("KGON_DEFAULT_K", "4"))

    # Brute-force oracle
    ORACLE_DELTA: float = float(os.getenv("ORACLE_DELTA", "0.05"))
    ORACLE_MAX_SUBSETS: int = int(os.getenv("ORACLE_MAX_SUBSETS", str(10**7)))

    # Rendering
    SVG_PADDING: float = float(os.getenv("SVG_PADDING", "0.05"))

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @classmethod
    def tiny_fraction_for(cls, k: int) -> float:
        """Default tiny sub-interval fraction for a given k."""
        return 1.0 / (8 * k)


# Export config instance
config = Config()
