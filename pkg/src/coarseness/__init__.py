"""Coarseness of two-colored planar point sets.

Exact coarseness by convex-partition enumeration for small sets, certified
bounds from the best island cut out by two halfplanes, constructive witness
partitions, shatter counting and a local search for low-coarseness colorings.
"""
from .approx import CoarsenessBounds, approximate_coarseness
from .coloring import ColoringSearchConfig, balanced_coloring, minimize_coarseness_coloring, random_coloring
from .discrepancy import (
    MaxDiscResult,
    ShatterCount,
    disc,
    max_disc_halfplane,
    max_disc_k,
    max_disc_wedge,
    shatter_classes,
)
from .errors import BudgetExceeded, CoarsenessError, GeneralPositionError, InvalidIslandError, ParseError
from .generate import generate_points
from .geometry import ConvexPolygon, Point, convex_hull, hulls_disjoint, in_general_position, orientation
from .io import InstanceFile, ReportRecord
from .islands import (
    Halfplane,
    Island,
    canonical_halfplanes,
    enumerate_islands,
    island_from_halfplanes,
    separability_number,
)
from .kernels import BACKEND
from .partitions import (
    CoarsenessResult,
    ConvexPartition,
    PartitionViolation,
    enumerate_convex_partitions,
    exact_coarseness,
    find_5sep_block,
    partition_disc,
    partition_from_1sep,
    partition_from_2sep,
    validate_partition,
)
from .pointset import BLUE, RED, ColoredPointSet

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BLUE", "RED", "BudgetExceeded", "CoarsenessBounds", "CoarsenessError",
    "CoarsenessResult", "ColoredPointSet", "ColoringSearchConfig", "ConvexPartition",
    "ConvexPolygon", "GeneralPositionError", "Halfplane", "InstanceFile", "InvalidIslandError",
    "Island", "MaxDiscResult", "ParseError", "PartitionViolation", "Point", "ReportRecord",
    "ShatterCount", "approximate_coarseness", "balanced_coloring", "canonical_halfplanes",
    "convex_hull", "disc", "enumerate_convex_partitions", "enumerate_islands", "exact_coarseness",
    "find_5sep_block", "generate_points", "hulls_disjoint", "in_general_position",
    "island_from_halfplanes", "max_disc_halfplane", "max_disc_k", "max_disc_wedge",
    "minimize_coarseness_coloring", "orientation", "partition_disc", "partition_from_1sep",
    "partition_from_2sep", "random_coloring", "separability_number", "shatter_classes",
    "validate_partition",
]
