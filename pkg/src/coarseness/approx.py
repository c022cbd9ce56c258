"""Constant-factor approximation of coarseness from the best two-halfplane island."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .discrepancy import max_disc_wedge
from .partitions import ConvexPartition, partition_disc, partition_from_2sep, two_sep_bound
from .pointset import ColoredPointSet


@dataclass(frozen=True)
class CoarsenessBounds:
    """``lower <= witness_disc <= C(S) <= upper`` with ``upper = 16 * d2``."""

    d2: int
    lower: Fraction
    upper: int
    witness: ConvexPartition
    witness_disc: int


def approximate_coarseness(ps: ColoredPointSet) -> CoarsenessBounds:
    if ps.n < 1:
        raise ValueError("need at least one point")
    best = max_disc_wedge(ps)
    d2 = best.value
    pi, _ = partition_from_2sep(ps, best.witness)
    lower = two_sep_bound(d2, abs(ps.r - ps.b))
    return CoarsenessBounds(d2, lower, 16 * d2, pi, partition_disc(ps, pi))

