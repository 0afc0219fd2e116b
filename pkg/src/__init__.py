"""
Terrain k-gon toolkit

Computes the diameter and the largest-perimeter inscribed triangle of a 1.5D
terrain, and approximates the largest area/perimeter convex polygon with at
most k vertices inside it.
"""

__version__ = "1.0.0"
__author__ = "Terrain k-gon Team"
