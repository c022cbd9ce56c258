"""Discrepancy of islands and maximum discrepancy over k-separable families."""
from __future__ import annotations

import random
from dataclasses import dataclass

from . import kernels
from ._angles import gap_direction
from .islands import (
    DEFAULT_BUDGET,
    Halfplane,
    Island,
    enumerate_islands,
    island_from_halfplanes,
    members_mask,
    whole_halfplane,
)
from .pointset import ColoredPointSet


@dataclass(frozen=True)
class MaxDiscResult:
    value: int
    witness: Island


@dataclass(frozen=True)
class ShatterCount:
    """Number of distinct intersection patterns of ``m`` islands on the plane."""

    m: int
    k: int
    classes: int


def disc(ps: ColoredPointSet, members) -> int:
    """``|#red - #blue|`` over ``members`` (indices, bitmask or Island)."""
    return abs(ps.signed_sum(members_mask(members)))


def _coords(ps: ColoredPointSet):
    return [p.x for p in ps.points], [p.y for p in ps.points]


def _gap_halfplane(ps, xs, ys, pivot, gap) -> Halfplane:
    return Halfplane.left_of(ps.points[pivot], gap_direction(xs, ys, pivot, gap))


def max_disc_halfplane(ps: ColoredPointSet) -> MaxDiscResult:
    """``D1``: maximum discrepancy of a halfplane subset, with a certificate."""
    xs, ys = _coords(ps)
    best, _, _, pivot, gap = kernels.halfplane_scan(xs, ys, list(ps.colors))
    hp = whole_halfplane(ps) if pivot < 0 else _gap_halfplane(ps, xs, ys, pivot, gap)
    return MaxDiscResult(best, island_from_halfplanes(ps, [hp]))


def max_disc_wedge(ps: ColoredPointSet) -> MaxDiscResult:
    """``D2``: maximum discrepancy over intersections of two halfplanes."""
    d1 = max_disc_halfplane(ps)
    xs, ys = _coords(ps)
    best, _, _, p, gp, u, gu = kernels.wedge_scan(xs, ys, list(ps.colors), False)
    if best <= d1.value:
        return d1
    hs = [_gap_halfplane(ps, xs, ys, p, gp), _gap_halfplane(ps, xs, ys, u, gu)]
    return MaxDiscResult(best, island_from_halfplanes(ps, hs))


def d2_key(ps: ColoredPointSet) -> tuple[int, int]:
    """``(D2, number of maximizing slots)``, the descent key for colorings."""
    xs, ys = _coords(ps)
    w = list(ps.colors)
    b1, c1 = kernels.halfplane_scan(xs, ys, w)[:2]
    b2, c2 = kernels.wedge_scan(xs, ys, w, True)[:2]
    best = max(b1, b2)
    return best, (c1 if b1 == best else 0) + (c2 if b2 == best else 0)


def max_disc_k(ps: ColoredPointSet, k: int, budget: int = DEFAULT_BUDGET) -> MaxDiscResult:
    """``Dk`` by explicit enumeration; ties go to the smallest member tuple."""
    best = None
    for isl in enumerate_islands(ps, k, budget):
        d = disc(ps, isl.mask)
        if best is None or d > best.value:
            best = MaxDiscResult(d, isl)
    return best


def shatter_classes(ps: ColoredPointSet, family, k: int | None = None) -> ShatterCount:
    """Count equivalence classes of points of ``ps`` under ``family``.

    Two points are equivalent when they belong to exactly the same islands.
    ``k`` defaults to the longest certificate in the family.
    """
    family = list(family)
    masks = [members_mask(f) for f in family]
    if not masks:
        raise ValueError("family must be nonempty")
    patterns = set()
    for i in range(ps.n):
        patterns.add(tuple((m >> i) & 1 for m in masks))
    if k is None:
        k = max((len(f.certificate) for f in family if isinstance(f, Island)), default=0)
    return ShatterCount(len(family), k, len(patterns))


def sample_islands(ps: ColoredPointSet, k: int, m: int, seed: int,
                   budget: int = DEFAULT_BUDGET) -> list[Island]:
    """``m`` distinct k-separable islands drawn uniformly with ``seed``."""
    pool = enumerate_islands(ps, k, budget)
    rng = random.Random(seed)
    return rng.sample(pool, min(m, len(pool)))
