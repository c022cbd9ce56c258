"""Halfplane certificates, islands and k-separable island families.

Every subset of ``S`` cut out by a halfplane is realized by an *open*
halfplane whose boundary passes through a point outside the subset (slide
the boundary outward until it touches one).  So the family of all halfplane
subsets is: the empty set, ``S``, and for every pivot ``u`` and every
angular gap around ``u`` the points strictly left of a directed line
through ``u``.  Intersections of ``t`` members of that family give exactly
the ``t``-separable islands.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from ._angles import gap_direction, sorted_directions
from .errors import BudgetExceeded, InvalidIslandError
from .geometry import convex_hull
from .pointset import ColoredPointSet, indices_of, mask_of

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True, order=True)
class Halfplane:
    """The set ``a*x + b*y + c >= 0`` (closed) or ``> 0`` (open).

    Coefficients are divided by their positive gcd; the sign is never
    changed since that would flip the side.
    """

    a: int
    b: int
    c: int
    closed: bool = False

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("halfplane needs a nonzero normal (a, b)")
        g = gcd(gcd(self.a, self.b), self.c)
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)
            object.__setattr__(self, "c", self.c // g)

    def value(self, p) -> int:
        return self.a * p[0] + self.b * p[1] + self.c

    def contains(self, p) -> bool:
        v = self.value(p)
        return v >= 0 if self.closed else v > 0

    def complement(self) -> "Halfplane":
        return Halfplane(-self.a, -self.b, -self.c, not self.closed)

    def mask(self, ps: ColoredPointSet) -> int:
        return _mask(self, ps.points)

    @classmethod
    def left_of(cls, through, direction) -> "Halfplane":
        """Open halfplane strictly left of the line through ``through`` heading ``direction``."""
        dx, dy = direction
        return cls(-dy, dx, dy * through[0] - dx * through[1], False)

    def closed_variant(self) -> "Halfplane":
        return Halfplane(self.a, self.b, self.c, True)

    def to_list(self) -> list:
        return [self.a, self.b, self.c, self.closed]


@dataclass(frozen=True)
class Island:
    """A subset of point indices together with the halfplanes that cut it out."""

    members: tuple[int, ...]
    certificate: tuple[Halfplane, ...] = ()

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @classmethod
    def from_mask(cls, mask: int, certificate: Sequence[Halfplane] = ()) -> "Island":
        return cls(indices_of(mask), tuple(certificate))


def whole_halfplane(ps: ColoredPointSet) -> Halfplane:
    """A horizontal halfplane containing every point."""
    lo = min((p.y for p in ps.points), default=0)
    return Halfplane(0, 1, 1 - lo)


def gap_halfplane(ps: ColoredPointSet, pivot: int, gap: int) -> Halfplane:
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    return Halfplane.left_of(ps.points[pivot], gap_direction(xs, ys, pivot, gap))


def halfplane_family(ps: ColoredPointSet) -> tuple[tuple[int, Halfplane], ...]:
    """Every halfplane-induced subset exactly once, as ``(mask, certificate)``.

    Order: ``S``, the empty set, then pivots by index and gaps
    counterclockwise; the first certificate seen for a subset is kept.
    """
    return _family(ps.points)


def _mask(hp: Halfplane, points) -> int:
    m = 0
    for i, p in enumerate(points):
        if hp.contains(p):
            m |= 1 << i
    return m


@lru_cache(maxsize=64)
def _family(points) -> tuple[tuple[int, Halfplane], ...]:
    lo = min((p.y for p in points), default=0)
    whole = Halfplane(0, 1, 1 - lo)
    empty = Halfplane(0, -1, lo - 1)
    seen: dict[int, Halfplane] = {_mask(whole, points): whole}
    seen.setdefault(_mask(empty, points), empty)
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    for u in range(len(points) if len(points) >= 2 else 0):
        dirs = sorted_directions(xs, ys, u)
        up = points[u]
        for j in range(len(dirs)):
            a, b = dirs[j], dirs[(j + 1) % len(dirs)]
            if a[0] * b[1] - a[1] * b[0] > 0:
                d = (a[0] + b[0], a[1] + b[1])
            else:
                d = (-a[1], a[0])
            hp = Halfplane.left_of(up, d)
            seen.setdefault(_mask(hp, points), hp)
    return tuple(seen.items())


def canonical_halfplanes(ps: ColoredPointSet) -> list[Halfplane]:
    """Halfplanes inducing every halfplane-separable subset of ``ps`` once."""
    return [hp for _, hp in halfplane_family(ps)]


def island_from_halfplanes(ps: ColoredPointSet, hs: Sequence[Halfplane]) -> Island:
    if not hs:
        raise ValueError("need at least one halfplane")
    members = tuple(i for i, p in enumerate(ps.points) if all(h.contains(p) for h in hs))
    return Island(members, tuple(hs))


def hull_closure(ps: ColoredPointSet, mask: int) -> int:
    """Mask of all points of ``ps`` lying in the closed hull of ``mask``."""
    return _hull_closure(ps.points, mask)


@lru_cache(maxsize=1 << 16)
def _hull_closure(points, mask: int) -> int:
    if mask & (mask - 1) == 0:
        return mask
    hull = convex_hull(points[i] for i in indices_of(mask))
    out = mask
    for i, p in enumerate(points):
        if not (mask >> i) & 1 and hull.contains(p):
            out |= 1 << i
    return out


def is_island(ps: ColoredPointSet, members) -> bool:
    mask = members if isinstance(members, int) else mask_of(members)
    return hull_closure(ps, mask) == mask


def _estimate(h: int, n: int, k: int) -> int:
    work = h * n
    for t in range(1, k):
        work += min(comb(h, t), 1 << n) * h * max(n, 1)
    return work


def _closure(family, k: int, stop=None) -> dict[int, tuple[Halfplane, ...]]:
    """Distinct intersections of at most ``k`` family members, with certificates."""
    found: dict[int, tuple[Halfplane, ...]] = {}
    level: dict[int, tuple[Halfplane, ...]] = {}
    for mask, hp in family:
        if mask not in found:
            found[mask] = level[mask] = (hp,)
    if stop is not None and stop in found:
        return found
    for _ in range(1, k):
        nxt: dict[int, tuple[Halfplane, ...]] = {}
        for mask, cert in level.items():
            for m2, hp in family:
                x = mask & m2
                if x not in found and x not in nxt:
                    nxt[x] = cert + (hp,)
        if not nxt:
            break
        found.update(nxt)
        level = nxt
        if stop is not None and stop in nxt:
            break
    return found


def enumerate_islands(ps: ColoredPointSet, k: int, budget: int = DEFAULT_BUDGET) -> list[Island]:
    """All distinct k-separable islands (empty set and ``S`` included), sorted by members."""
    if not 1 <= k <= 6:
        raise ValueError("k must be in 1..6")
    family = halfplane_family(ps)
    est = _estimate(len(family), ps.n, k)
    if est > budget:
        raise BudgetExceeded(
            f"enumerating {k}-separable islands of {ps.n} points needs ~{est} checks",
            estimate=est, budget=budget)
    found = _closure(family, k)
    islands = [Island.from_mask(m, cert) for m, cert in found.items()]
    islands.sort(key=lambda isl: isl.members)
    return islands


def separating_certificate(ps: ColoredPointSet, members, k_max: int = 5,
                           budget: int = DEFAULT_BUDGET):
    """Fewest halfplanes (at most ``k_max``) cutting out ``members``, or None."""
    mask = members if isinstance(members, int) else mask_of(members)
    if not is_island(ps, mask):
        raise InvalidIslandError(f"{indices_of(mask)} is not an island")
    family = tuple((m, hp) for m, hp in halfplane_family(ps) if m & mask == mask)
    est = _estimate(len(family), ps.n, k_max)
    if est > budget:
        raise BudgetExceeded(
            f"separability search on {ps.n} points needs ~{est} checks",
            estimate=est, budget=budget)
    return _separating(ps.points, mask, k_max, family)


@lru_cache(maxsize=1 << 14)
def _separating(points, mask, k_max, family):
    return _closure(family, k_max, stop=mask).get(mask)


def separability_number(ps: ColoredPointSet, members, k_max: int = 5,
                        budget: int = DEFAULT_BUDGET):
    """Minimum number of halfplanes separating ``members`` from the rest.

    Returns None when more than ``k_max`` would be needed.
    """
    cert = separating_certificate(ps, members, k_max, budget)
    return None if cert is None else len(cert)


def one_separable_certificate(ps: ColoredPointSet, members) -> Halfplane | None:
    mask = members if isinstance(members, int) else mask_of(members)
    for m, hp in halfplane_family(ps):
        if m == mask:
            return hp
    return None


def members_mask(members: Iterable[int] | int | Island) -> int:
    if isinstance(members, Island):
        return members.mask
    if isinstance(members, int):
        return members
    return mask_of(members)


def hull_certificate(ps: ColoredPointSet, members) -> tuple[Halfplane, ...]:
    """Closed halfplanes whose intersection meets ``S`` exactly in ``members``.

    ``members`` must be a nonempty island.  Polygons use their edge lines; a
    segment uses both closed sides of its supporting line, and a single
    point a line through it that avoids every other point.
    """
    return _hull_certificate(ps.points, members_mask(members))


@lru_cache(maxsize=1 << 16)
def _hull_certificate(points, mask: int) -> tuple[Halfplane, ...]:
    idx = indices_of(mask)
    if not idx:
        raise InvalidIslandError("the empty set has no hull certificate")
    if len(idx) == 1:
        u = idx[0]
        if len(points) == 1:
            d = (1, 0)
        else:
            d = gap_direction([p.x for p in points], [p.y for p in points], u, 0)
        line = Halfplane.left_of(points[u], d).closed_variant()
        return line, line.complement().closed_variant()
    hull = convex_hull(points[i] for i in idx)
    vs = hull.vertices
    if len(vs) == 2:
        d = (vs[1][0] - vs[0][0], vs[1][1] - vs[0][1])
        line = Halfplane.left_of(vs[0], d).closed_variant()
        return line, line.complement().closed_variant()
    out = []
    for a, b in zip(vs, vs[1:] + vs[:1]):
        hp = Halfplane.left_of(a, (b[0] - a[0], b[1] - a[1]))
        out.append(hp.closed_variant())
    return tuple(out)
