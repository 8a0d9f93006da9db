"""Exact enumeration and counting of triangulations of planar point sets."""
from .geometry import PointSet, convex_hull, general_position_check, read_point_file
from .triangulation import Triangulation, degree_profile, validate

__version__ = "0.1.0"

__all__ = [
    "PointSet", "Triangulation", "convex_hull", "degree_profile", "general_position_check",
    "read_point_file", "validate",
]
