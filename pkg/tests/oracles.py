"""Slow, independent reference implementations used as test oracles.

Nothing here uses the angular sweep, the halfplane family or the partition
enumerator of the package.  Geometry is redone with inline orientation
tests; linear separability is also available through scipy's LP solver.
"""
from __future__ import annotations

import itertools

from scipy.optimize import linprog


def orient(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def in_triangle(q, a, b, c) -> bool:
    s1, s2, s3 = orient(a, b, q), orient(b, c, q), orient(c, a, q)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


def crosses(a, b, c, d) -> bool:
    """Proper crossing of segments ``ab`` and ``cd`` (general position)."""
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


def in_hull(q, pts) -> bool:
    """``q`` in the closed hull of ``pts``, for ``q`` not collinear with two of them."""
    if q in pts:
        return True
    return any(in_triangle(q, *t) for t in itertools.combinations(pts, 3))


def hulls_meet(a_pts, b_pts) -> bool:
    if not a_pts or not b_pts:
        return False
    if any(in_hull(q, a_pts) for q in b_pts) or any(in_hull(q, b_pts) for q in a_pts):
        return True
    return any(crosses(a, b, c, d)
               for a, b in itertools.combinations(a_pts, 2)
               for c, d in itertools.combinations(b_pts, 2))


def members(mask: int, n: int):
    return [i for i in range(n) if (mask >> i) & 1]


def separable_subsets(points) -> set[int]:
    """All subsets cut out by some halfplane, as bitmasks (empty set and S included)."""
    n = len(points)
    out = set()
    for mask in range(1 << n):
        inside = [points[i] for i in members(mask, n)]
        outside = [points[i] for i in range(n) if not (mask >> i) & 1]
        if not hulls_meet(inside, outside):
            out.add(mask)
    return out


def lp_separable(points, mask: int) -> bool:
    """Strict linear separability of ``mask`` from the rest via an LP."""
    n = len(points)
    a_ub, b_ub = [], []
    for i, (x, y) in enumerate(points):
        if (mask >> i) & 1:
            a_ub.append([-x, -y, -1])
        else:
            a_ub.append([x, y, 1])
        b_ub.append(-1)
    if not a_ub:
        return True
    res = linprog([0, 0, 0], A_ub=a_ub, b_ub=b_ub, bounds=[(None, None)] * 3, method="highs")
    return res.status == 0


def pair_line_family(points) -> set[int]:
    """Subsets induced by lines through two points (both sides, open and
    closed) plus the whole set."""
    n = len(points)
    out = {(1 << n) - 1}
    for i, j in itertools.permutations(range(n), 2):
        p, q = points[i], points[j]
        left_open = left_closed = 0
        for k, r in enumerate(points):
            o = orient(p, q, r)
            if o > 0:
                left_open |= 1 << k
            if o >= 0:
                left_closed |= 1 << k
        out.update((left_open, left_closed))
    return out


def intersection_closure(family: set[int], k: int) -> set[int]:
    sets = set(family)
    for _ in range(k - 1):
        sets |= {a & b for a in sets for b in family}
    return sets


def k_islands(points, k: int) -> set[int]:
    return intersection_closure(separable_subsets(points), k)


def is_island(points, mask: int) -> bool:
    n = len(points)
    inside = [points[i] for i in members(mask, n)]
    return not any(in_hull(points[q], inside) for q in range(n) if not (mask >> q) & 1)


def signed(colors, mask: int) -> int:
    return sum(c for i, c in enumerate(colors) if (mask >> i) & 1)


def max_disc(colors, sets) -> int:
    return max(abs(signed(colors, m)) for m in sets)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def convex_partitions(points) -> list[list[list[int]]]:
    """All convex partitions, each block sorted, blocks sorted."""
    out = []
    for part in set_partitions(list(range(len(points)))):
        masks = [sum(1 << i for i in b) for b in part]
        if not all(is_island(points, m) for m in masks):
            continue
        if any(hulls_meet([points[i] for i in a], [points[i] for i in b])
               for a, b in itertools.combinations(part, 2)):
            continue
        out.append(sorted(sorted(b) for b in part))
    return out


def coarseness(points, colors) -> int:
    best = 0
    for part in convex_partitions(points):
        best = max(best, min(abs(sum(colors[i] for i in b)) for b in part))
    return best
