"""Pure-Python implementations of the hot kernels.

These are the reference semantics for :mod:`coarseness._kernels`: both
backends must return identical tuples for identical inputs, including the
witness chosen among ties and the number of maximizing slots.

A *slot* is one (pivot, gap) pair, plus one extra slot for the whole set.
Witnesses are the first maximizer in scan order; ``count`` is the number of
slots (or slot pairs, for wedges) attaining the maximum absolute value.
"""
from __future__ import annotations

from ._angles import backward_index, sorted_directions

BACKEND = "python"


def halfplane_scan(xs, ys, w):
    """Max |signed sum| over all halfplane subsets.

    Returns ``(best, count, sign, pivot, gap)``; ``pivot == -1`` means the
    whole set is the witness.
    """
    n = len(xs)
    total = sum(w)
    best, count = abs(total), 1
    sign = 1 if total >= 0 else -1
    piv = gap = -1
    h = n - 1
    for u in range(n if n >= 2 else 0):
        dirs = sorted_directions(xs, ys, u)
        m = len(dirs)
        b = backward_index(dirs, n)
        s = 0
        for v in range(n):
            if v != u and (-b[v]) % m < h:
                s += w[v]
        for j in range(m):
            a = abs(s)
            if a > best:
                best, count, sign, piv, gap = a, 1, (1 if s >= 0 else -1), u, j
            elif a == best:
                count += 1
            if j + 1 < m:
                _, _, v, fwd = dirs[j + 1]
                s += -w[v] if fwd else w[v]
    return best, count, sign, piv, gap


def _pivot_extremes(vals, t):
    """Max/min over the full gap circle of one pivot, given its half array."""
    full = vals + [t - x for x in vals]
    fmax = max(full)
    fmin = min(full)
    value = max(fmax, -fmin)
    cnt = 0
    if fmax == value:
        cnt += full.count(fmax)
    if -fmin == value and value != 0:
        cnt += full.count(fmin)
    if fmax >= -fmin:
        return value, cnt, 1, full.index(fmax)
    return value, cnt, -1, full.index(fmin)


def wedge_scan(xs, ys, w, counts=True):
    """Max |signed sum| over intersections of two open halfplane subsets.

    The outer set ``A`` is the left set of ``(p, gap_p)`` and the inner set
    ``Y`` the left set of ``(u, gap_u)``.  Only ``u`` in ``A`` with
    ``u > p`` is scanned.  That loses nothing when neither halfplane alone
    cuts out ``A & Y`` (the other case is ``D1``): slide the boundary of
    ``Y`` outward until it touches a point of ``A`` and take that point as
    ``u``, then slide the boundary of ``A`` outward until it touches a point
    of ``Y``, which becomes ``p``.  Now ``u`` is in ``A`` and ``p`` is in
    ``Y``, so the roles of the two halfplanes can be swapped when ``u < p``.

    Returns ``(best, count, sign, p, gap_p, u, gap_u)``; ``best == -1`` when
    there are fewer than two points, and ``count == -1`` when ``counts`` is
    false.  The witness is the lexicographically first ``(p, gap_p, u)``.
    """
    n = len(xs)
    best, count, sign = -1, 0, 0
    wit = (-1, -1, -1, -1)
    if n < 2:
        return (best, count if counts else -1, sign) + wit
    h = n - 1
    m = 2 * h
    bidx = [backward_index(sorted_directions(xs, ys, u), n) for u in range(n)]

    for p in range(n):
        vals = [[0] * h for _ in range(n)]
        tot = [0] * n

        def update(v, delta):
            for u in range(n):
                if u == v:
                    continue
                bu = bidx[u][v]
                row = vals[u]
                if bu < h:
                    for j in range(bu, h):
                        row[j] += delta
                else:
                    for j in range(bu - h):
                        row[j] += delta
                tot[u] += delta

        bp = bidx[p]
        in_a = [False] * n
        for v in range(n):
            if v != p and (-bp[v]) % m < h:
                update(v, w[v])
                in_a[v] = True
        dirs_p = sorted_directions(xs, ys, p)
        for j in range(m):
            for u in range(p + 1, n):
                if not in_a[u]:
                    continue
                value, cnt, sgn, g = _pivot_extremes(vals[u], tot[u])
                if value > best:
                    best, count, sign = value, cnt, sgn
                    wit = (p, j, u, g)
                elif value == best:
                    count += cnt
            if j + 1 < m:
                _, _, v, fwd = dirs_p[j + 1]
                update(v, -w[v] if fwd else w[v])
                in_a[v] = not fwd
    return (best, count if counts else -1, sign) + wit


def local_search_d1(xs, ys, w, max_flips):
    """First-improvement single-flip descent on the key ``(D1, count)``.

    Candidates are tried cyclically in index order; the search stops after
    ``n`` consecutive non-improving candidates or ``max_flips`` flips.
    Returns ``(colors, flips, best, count)``.
    """
    w = list(w)
    n = len(w)
    best, count = halfplane_scan(xs, ys, w)[:2]
    flips = 0
    i = 0
    idle = 0
    while n and flips < max_flips and idle < n:
        w[i] = -w[i]
        nb, nc = halfplane_scan(xs, ys, w)[:2]
        if (nb, nc) < (best, count):
            best, count = nb, nc
            flips += 1
            idle = 0
        else:
            w[i] = -w[i]
            idle += 1
        i = (i + 1) % n
    return w, flips, best, count
