"""Exact planar predicates on integer points.

All coordinates are Python integers bounded by ``COORD_LIMIT`` in absolute
value, so every determinant below fits comfortably in 64 bits; that bound is
what the compiled kernels rely on.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 1 << 20


class Point(NamedTuple):
    x: int
    y: int


def cross(o, a, b) -> int:
    """Signed area (times two) of the triangle ``o, a, b``."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(a, b, c) -> int:
    """Return +1 if ``a, b, c`` turn counterclockwise, -1 if clockwise, 0 if collinear."""
    d = cross(a, b, c)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise hull; 0, 1 or 2 vertices encode empty/point/segment."""

    vertices: tuple[Point, ...] = ()

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        v = self.vertices
        if len(v) == 1:
            return [(v[0], v[0])]
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def contains(self, p) -> bool:
        """Closed containment test (boundary counts as inside)."""
        v = self.vertices
        if not v:
            return False
        if len(v) == 1:
            return v[0][0] == p[0] and v[0][1] == p[1]
        if len(v) == 2:
            return _on_segment(v[0], v[1], p)
        for i in range(len(v)):
            if cross(v[i], v[(i + 1) % len(v)], p) < 0:
                return False
        return True


def convex_hull(points: Iterable) -> ConvexPolygon:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(Point(int(p[0]), int(p[1])) for p in points))
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexPolygon(tuple(hull))


def _on_segment(a, b, p) -> bool:
    if cross(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ``ab`` and ``cd`` share a point (degenerate segments allowed)."""
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (_on_segment(c, d, a) or _on_segment(c, d, b)
            or _on_segment(a, b, c) or _on_segment(a, b, d))


def hulls_disjoint(p: ConvexPolygon, q: ConvexPolygon) -> bool:
    """True iff the closed convex regions ``p`` and ``q`` have no common point."""
    if not p.vertices or not q.vertices:
        return True
    for a, b in p.edges():
        for c, d in q.edges():
            if segments_intersect(a, b, c, d):
                return False
    # no boundary crossing: the only remaining way to meet is nesting
    if q.contains(p.vertices[0]) or p.contains(q.vertices[0]):
        return False
    return True


def in_general_position(points: Sequence) -> bool:
    """No duplicate points and no three collinear points."""
    return collinear_witness(points) is None


def collinear_witness(points: Sequence):
    """Indices ``(i, j, k)`` of three collinear points, or None.

    A duplicate pair is reported as ``(i, j, j)``.  Runs in O(n^2) expected
    time by hashing reduced direction vectors around every point.
    """
    pts = [(int(p[0]), int(p[1])) for p in points]
    first: dict[tuple[int, int], int] = {}
    for i, p in enumerate(pts):
        if p in first:
            return first[p], i, i
        first[p] = i
    for i, (x0, y0) in enumerate(pts):
        seen: dict[tuple[int, int], int] = {}
        for j, (x1, y1) in enumerate(pts):
            if j == i:
                continue
            dx, dy = x1 - x0, y1 - y0
            g = gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            if (dx, dy) in seen:
                return i, seen[(dx, dy)], j
            seen[(dx, dy)] = j
    return None


def check_coordinates(points: Sequence) -> None:
    for p in points:
        if abs(p[0]) > COORD_LIMIT or abs(p[1]) > COORD_LIMIT:
            raise ValueError(f"coordinate out of range +-{COORD_LIMIT}: {tuple(p)}")
