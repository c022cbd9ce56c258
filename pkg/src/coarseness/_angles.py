"""Exact angular order of the critical directions around a pivot point.

Around pivot ``u`` every other point ``v`` contributes two directions,
``v - u`` (forward) and ``u - v`` (backward).  Sorted counterclockwise they
split the circle into ``m = 2(n-1)`` open gaps; gap ``j`` lies between
direction ``j`` and direction ``j + 1``.  A directed line through ``u`` with
its direction inside gap ``j`` has, strictly on its left, exactly the points
``v`` whose backward index ``b`` satisfies ``(j - b) mod m < n - 1``.
Gaps ``j`` and ``j + n - 1`` are antipodal, so their left sets are
complementary within ``S - {u}``.
"""
from __future__ import annotations

from functools import cmp_to_key


def _half(dx: int, dy: int) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _cmp(a, b) -> int:
    ha, hb = _half(a[0], a[1]), _half(b[0], b[1])
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def sorted_directions(xs, ys, u):
    """List of ``(dx, dy, v, forward)`` sorted counterclockwise from angle 0."""
    dirs = []
    ux, uy = xs[u], ys[u]
    for v in range(len(xs)):
        if v == u:
            continue
        dx, dy = xs[v] - ux, ys[v] - uy
        dirs.append((dx, dy, v, True))
        dirs.append((-dx, -dy, v, False))
    dirs.sort(key=cmp_to_key(_cmp))
    return dirs


def backward_index(dirs, n):
    """``b[v]`` = position of ``u - v`` in the sorted list (-1 for the pivot)."""
    b = [-1] * n
    for idx, (_, _, v, fwd) in enumerate(dirs):
        if not fwd:
            b[v] = idx
    return b


def gap_direction(xs, ys, u, j):
    """An integer direction strictly inside gap ``j`` around pivot ``u``."""
    dirs = sorted_directions(xs, ys, u)
    a = dirs[j]
    b = dirs[(j + 1) % len(dirs)]
    if a[0] * b[1] - a[1] * b[0] > 0:
        return a[0] + b[0], a[1] + b[1]
    # only two directions exist (n == 2): the gap is a half-turn
    return -a[1], a[0]
