# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops; semantics are defined by ``coarseness._fallback``.

Coordinates are assumed bounded by 2**20, so every cross product of
difference vectors fits in int64.  Signed sums fit in int32.

Per pivot ``u`` the wedge and local-search kernels keep a segment tree over
the ``h = n - 1`` gaps of the first half-turn.  The value at gap ``j`` is the
weight of the open left set; the antipodal gap ``j + h`` holds
``tot[u] - value`` and is never stored.  Inserting point ``v`` adds its
weight to a prefix or a suffix of the half array, never a general range.
"""
from libc.stdlib cimport malloc, calloc, free, qsort
from libc.stdint cimport int64_t, int32_t

BACKEND = "cython"

cdef enum:
    BIG = 1073741824


cdef struct Dir:
    int64_t dx
    int64_t dy
    int32_t v
    int32_t fwd


cdef struct Agg:
    int32_t mx
    int32_t cx
    int32_t mn
    int32_t cn


cdef struct Forest:
    int n
    int h
    int P
    int32_t* mx
    int32_t* mn
    int32_t* cx
    int32_t* cn
    int32_t* ad
    int32_t* tot


cdef inline int _half(int64_t dx, int64_t dy) noexcept nogil:
    if dy > 0 or (dy == 0 and dx > 0):
        return 0
    return 1


cdef int _cmp_dir(const void* pa, const void* pb) noexcept nogil:
    cdef const Dir* a = <const Dir*>pa
    cdef const Dir* b = <const Dir*>pb
    cdef int ha = _half(a.dx, a.dy)
    cdef int hb = _half(b.dx, b.dy)
    cdef int64_t c
    if ha != hb:
        return ha - hb
    c = a.dx * b.dy - a.dy * b.dx
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


cdef void _sort_dirs(const int64_t* xs, const int64_t* ys, int n, int u, Dir* out) noexcept nogil:
    cdef int k = 0
    cdef int v
    for v in range(n):
        if v == u:
            continue
        out[k].dx = xs[v] - xs[u]
        out[k].dy = ys[v] - ys[u]
        out[k].v = v
        out[k].fwd = 1
        k += 1
        out[k].dx = xs[u] - xs[v]
        out[k].dy = ys[u] - ys[v]
        out[k].v = v
        out[k].fwd = 0
        k += 1
    qsort(out, k, sizeof(Dir), _cmp_dir)


cdef void _backward(const Dir* dirs, int m, int32_t* b) noexcept nogil:
    cdef int k
    for k in range(m):
        if not dirs[k].fwd:
            b[dirs[k].v] = k


# ---------------------------------------------------------------- forest

cdef void _forest_zero(Forest* f) noexcept nogil:
    f.mx = NULL
    f.mn = NULL
    f.cx = NULL
    f.cn = NULL
    f.ad = NULL
    f.tot = NULL


cdef int _forest_init(Forest* f, int n) noexcept nogil:
    cdef int P = 1
    cdef size_t total
    f.n = n
    f.h = n - 1
    while P < f.h:
        P <<= 1
    f.P = P
    total = <size_t>n * 2 * P
    f.mx = <int32_t*>malloc(total * sizeof(int32_t))
    f.mn = <int32_t*>malloc(total * sizeof(int32_t))
    f.cx = <int32_t*>malloc(total * sizeof(int32_t))
    f.cn = <int32_t*>malloc(total * sizeof(int32_t))
    f.ad = <int32_t*>malloc(total * sizeof(int32_t))
    f.tot = <int32_t*>malloc(n * sizeof(int32_t))
    if not (f.mx and f.mn and f.cx and f.cn and f.ad and f.tot):
        return -1
    return 0


cdef void _forest_free(Forest* f) noexcept nogil:
    free(f.mx)
    free(f.mn)
    free(f.cx)
    free(f.cn)
    free(f.ad)
    free(f.tot)


cdef inline void _pull_nc(int32_t* mx, int32_t* mn, int32_t* ad, int i) noexcept nogil:
    cdef int l = 2 * i
    cdef int32_t a = mx[l]
    cdef int32_t b = mx[l + 1]
    mx[i] = (a if a > b else b) + ad[i]
    a = mn[l]
    b = mn[l + 1]
    mn[i] = (a if a < b else b) + ad[i]


cdef inline void _pull(int32_t* mx, int32_t* mn, int32_t* cx, int32_t* cn,
                       int32_t* ad, int i) noexcept nogil:
    cdef int l = 2 * i
    cdef int r = l + 1
    cdef int32_t a = mx[l]
    cdef int32_t b = mx[r]
    if a > b:
        mx[i] = a
        cx[i] = cx[l]
    elif a < b:
        mx[i] = b
        cx[i] = cx[r]
    else:
        mx[i] = a
        cx[i] = cx[l] + cx[r]
    a = mn[l]
    b = mn[r]
    if a < b:
        mn[i] = a
        cn[i] = cn[l]
    elif a > b:
        mn[i] = b
        cn[i] = cn[r]
    else:
        mn[i] = a
        cn[i] = cn[l] + cn[r]
    mx[i] += ad[i]
    mn[i] += ad[i]


cdef void _forest_reset(Forest* f) noexcept nogil:
    cdef int u, i
    cdef int P = f.P
    cdef size_t o
    for u in range(f.n):
        o = <size_t>u * 2 * P
        for i in range(P):
            if i < f.h:
                f.mx[o + P + i] = 0
                f.mn[o + P + i] = 0
                f.cx[o + P + i] = 1
                f.cn[o + P + i] = 1
            else:
                f.mx[o + P + i] = -BIG
                f.mn[o + P + i] = BIG
                f.cx[o + P + i] = 0
                f.cn[o + P + i] = 0
            f.ad[o + P + i] = 0
        i = P - 1
        while i >= 1:
            f.ad[o + i] = 0
            _pull(f.mx + o, f.mn + o, f.cx + o, f.cn + o, f.ad + o, i)
            i -= 1
        f.tot[u] = 0


cdef inline void _apply(int32_t* mx, int32_t* mn, int32_t* ad, int P, int i, int32_t v) noexcept nogil:
    mx[i] += v
    mn[i] += v
    if i < P:
        ad[i] += v


cdef void _range_add(Forest* f, int u, int l, int r, int32_t v) noexcept nogil:
    cdef int P = f.P
    cdef size_t o = <size_t>u * 2 * P
    cdef int32_t* mx = f.mx + o
    cdef int32_t* mn = f.mn + o
    cdef int32_t* cx = f.cx + o
    cdef int32_t* cn = f.cn + o
    cdef int32_t* ad = f.ad + o
    cdef int l0, r0
    if l >= r:
        return
    l += P
    r += P
    l0 = l
    r0 = r - 1
    while l < r:
        if l & 1:
            _apply(mx, mn, ad, P, l, v)
            l += 1
        if r & 1:
            r -= 1
            _apply(mx, mn, ad, P, r, v)
        l >>= 1
        r >>= 1
    l0 >>= 1
    while l0 >= 1:
        _pull(mx, mn, cx, cn, ad, l0)
        l0 >>= 1
    r0 >>= 1
    while r0 >= 1:
        _pull(mx, mn, cx, cn, ad, r0)
        r0 >>= 1


cdef void _forest_update(Forest* f, const int32_t* bidx, int v, int32_t delta) noexcept nogil:
    """Add ``delta`` (the weight of ``v``) to every left set containing ``v``."""
    cdef int u, b
    cdef int n = f.n
    cdef int h = f.h
    for u in range(n):
        if u == v:
            continue
        b = bidx[<size_t>u * n + v]
        if b < h:
            _range_add(f, u, b, h, delta)
        else:
            _range_add(f, u, 0, b - h, delta)
        f.tot[u] += delta


cdef int _leftmost(const int32_t* arr, const int32_t* ad, int P) noexcept nogil:
    cdef int i = 1
    cdef int32_t target
    while i < P:
        target = arr[i] - ad[i]
        if arr[2 * i] == target:
            i = 2 * i
        else:
            i = 2 * i + 1
    return i - P


cdef inline void _full_extremes(int32_t hmx, int32_t hcx, int32_t hmn, int32_t hcn, int32_t t,
                                int32_t* fmax, int32_t* fmaxc, bint* fmax_first,
                                int32_t* fmin, int32_t* fminc, bint* fmin_first) noexcept nogil:
    cdef int32_t a = hmx
    cdef int32_t b = t - hmn
    cdef int32_t c = hmn
    cdef int32_t d = t - hmx
    if a >= b:
        fmax[0] = a
    else:
        fmax[0] = b
    fmaxc[0] = 0
    if a == fmax[0]:
        fmaxc[0] += hcx
    if b == fmax[0]:
        fmaxc[0] += hcn
    fmax_first[0] = a == fmax[0]
    if c <= d:
        fmin[0] = c
    else:
        fmin[0] = d
    fminc[0] = 0
    if c == fmin[0]:
        fminc[0] += hcn
    if d == fmin[0]:
        fminc[0] += hcx
    fmin_first[0] = c == fmin[0]


cdef inline void _value_count(int32_t fmax, int32_t fmaxc, int32_t fmin, int32_t fminc,
                              int32_t* value, int64_t* cnt) noexcept nogil:
    cdef int32_t val = fmax
    if -fmin > val:
        val = -fmin
    value[0] = val
    cnt[0] = 0
    if fmax == val:
        cnt[0] += fmaxc
    if -fmin == val and val != 0:
        cnt[0] += fminc


# ---------------------------------------------------------------- helpers

cdef int64_t* _copy_i64(seq, int n) except NULL:
    cdef int64_t* out = <int64_t*>malloc((n if n > 0 else 1) * sizeof(int64_t))
    cdef int i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


cdef int32_t* _copy_i32(seq, int n) except NULL:
    cdef int32_t* out = <int32_t*>malloc((n if n > 0 else 1) * sizeof(int32_t))
    cdef int i
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


cdef int32_t* _all_backward(const int64_t* xs, const int64_t* ys, int n) noexcept nogil:
    cdef int m = 2 * (n - 1)
    cdef int32_t* bidx = <int32_t*>malloc(<size_t>n * n * sizeof(int32_t))
    cdef Dir* dirs = <Dir*>malloc((m if m > 0 else 1) * sizeof(Dir))
    cdef int u
    if bidx == NULL or dirs == NULL:
        free(bidx)
        free(dirs)
        return NULL
    for u in range(n):
        _sort_dirs(xs, ys, n, u, dirs)
        bidx[<size_t>u * n + u] = -1
        _backward(dirs, m, bidx + <size_t>u * n)
    free(dirs)
    return bidx


# ---------------------------------------------------------------- halfplanes

cdef void _halfplane_core(const int64_t* xs, const int64_t* ys, const int32_t* w, int n,
                          Dir* dirs, int32_t* b, int64_t* res) noexcept nogil:
    cdef int64_t total = 0
    cdef int64_t best, count, s, a
    cdef int sign, piv, gap, u, v, j
    cdef int h = n - 1
    cdef int m = 2 * h
    for v in range(n):
        total += w[v]
    best = total if total >= 0 else -total
    count = 1
    sign = 1 if total >= 0 else -1
    piv = -1
    gap = -1
    if n >= 2:
        for u in range(n):
            _sort_dirs(xs, ys, n, u, dirs)
            _backward(dirs, m, b)
            s = 0
            for v in range(n):
                if v != u and (b[v] == 0 or b[v] > h):
                    s += w[v]
            for j in range(m):
                a = s if s >= 0 else -s
                if a > best:
                    best = a
                    count = 1
                    sign = 1 if s >= 0 else -1
                    piv = u
                    gap = j
                elif a == best:
                    count += 1
                if j + 1 < m:
                    v = dirs[j + 1].v
                    if dirs[j + 1].fwd:
                        s -= w[v]
                    else:
                        s += w[v]
    res[0] = best
    res[1] = count
    res[2] = sign
    res[3] = piv
    res[4] = gap


def halfplane_scan(xs, ys, w):
    cdef int n = len(xs)
    cdef int64_t* cx = _copy_i64(xs, n)
    cdef int64_t* cy = _copy_i64(ys, n)
    cdef int32_t* cw = _copy_i32(w, n)
    cdef int m = 2 * (n - 1) if n > 1 else 1
    cdef Dir* dirs = <Dir*>malloc(m * sizeof(Dir))
    cdef int32_t* b = <int32_t*>malloc((n if n > 0 else 1) * sizeof(int32_t))
    cdef int64_t res[5]
    try:
        if dirs == NULL or b == NULL:
            raise MemoryError()
        with nogil:
            _halfplane_core(cx, cy, cw, n, dirs, b, res)
        return (res[0], res[1], <int>res[2], <int>res[3], <int>res[4])
    finally:
        free(cx)
        free(cy)
        free(cw)
        free(dirs)
        free(b)


# ---------------------------------------------------------------- wedges

cdef void _tree_build(int32_t* mx, int32_t* mn, int32_t* cx, int32_t* cn, int32_t* ad,
                      int P, int h, const int32_t* leaf) noexcept nogil:
    cdef int i
    for i in range(P):
        if i < h:
            mx[P + i] = leaf[i]
            mn[P + i] = leaf[i]
            cx[P + i] = 1
            cn[P + i] = 1
        else:
            mx[P + i] = -BIG
            mn[P + i] = BIG
            cx[P + i] = 0
            cn[P + i] = 0
        ad[P + i] = 0
    i = P - 1
    while i >= 1:
        ad[i] = 0
        _pull(mx, mn, cx, cn, ad, i)
        i -= 1


cdef inline void _side_add(int32_t* mx, int32_t* mn, int32_t* cx, int32_t* cn, int32_t* ad,
                           int P, int l, int r, int32_t v, bint counts) noexcept nogil:
    """Add ``v`` on ``[l, r)`` where ``l == 0`` or ``r == P``.

    Every applied node then hangs off a single root path, so one pull pass
    suffices.
    """
    cdef int leaf
    if l >= r:
        return
    if l == 0 and r == P:
        _apply(mx, mn, ad, P, 1, v)
        return
    leaf = (r - 1 + P) if l == 0 else (l + P)
    l += P
    r += P
    while l < r:
        if l & 1:
            _apply(mx, mn, ad, P, l, v)
            l += 1
        if r & 1:
            r -= 1
            _apply(mx, mn, ad, P, r, v)
        l >>= 1
        r >>= 1
    leaf >>= 1
    if counts:
        while leaf >= 1:
            _pull(mx, mn, cx, cn, ad, leaf)
            leaf >>= 1
    else:
        while leaf >= 1:
            _pull_nc(mx, mn, ad, leaf)
            leaf >>= 1


cdef int _wedge_core(const int64_t* xs, const int64_t* ys, const int32_t* w, int n,
                     bint counts, int64_t* res) noexcept nogil:
    # Loop order (p, u, j) keeps one small tree hot in cache; the witness is
    # still the lexicographically first (p, j, u) maximizer.  For each (p, u)
    # only the h consecutive outer gaps whose left set contains u are
    # visited, starting at the gap where u enters.  Only u > p is needed,
    # see the fallback for why.
    cdef int h = n - 1
    cdef int m = 2 * h
    cdef int P = 1
    cdef int32_t* bidx
    cdef Dir* dirs = NULL
    cdef int32_t* buf = NULL
    cdef int32_t* mx
    cdef int32_t* mn
    cdef int32_t* cx
    cdef int32_t* cn
    cdef int32_t* ad
    cdef int32_t* leaf
    cdef int32_t* inA
    cdef int p, j, u, v, b, sign, gap, i, k, s0
    cdef int wp = -1
    cdef int wj = -1
    cdef int wu = -1
    cdef int64_t best = -1
    cdef int64_t count = 0
    cdef int64_t cnt
    cdef int32_t value, fmax, fmaxc, fmin, fminc, t, delta, acc
    cdef bint fmax_first, fmin_first, better

    while P < h:
        P <<= 1
    bidx = _all_backward(xs, ys, n)
    if bidx == NULL:
        return -1
    dirs = <Dir*>malloc(m * sizeof(Dir))
    buf = <int32_t*>malloc((5 * 2 * P + (h + 1) + n) * sizeof(int32_t))
    if dirs == NULL or buf == NULL:
        free(bidx)
        free(dirs)
        free(buf)
        return -1
    mx = buf
    mn = mx + 2 * P
    cx = mn + 2 * P
    cn = cx + 2 * P
    ad = cn + 2 * P
    leaf = ad + 2 * P
    inA = leaf + (h + 1)

    for p in range(n):
        _sort_dirs(xs, ys, n, p, dirs)
        for v in range(n):
            b = bidx[<size_t>p * n + v]
            inA[v] = 1 if (v != p and (b == 0 or b > h)) else 0
        for u in range(p + 1, n):
            s0 = bidx[<size_t>p * n + u]
            # half array of u for A = left set of gap s0 around p
            for i in range(h + 1):
                leaf[i] = 0
            t = 0
            for v in range(n):
                if v == u or v == p:
                    continue
                b = bidx[<size_t>p * n + v]
                if (s0 - b + m) % m >= h:
                    continue
                b = bidx[<size_t>u * n + v]
                if b < h:
                    leaf[b] += w[v]
                else:
                    leaf[0] += w[v]
                    leaf[b - h] -= w[v]
                t += w[v]
            acc = 0
            for i in range(h):
                acc += leaf[i]
                leaf[i] = acc
            _tree_build(mx, mn, cx, cn, ad, P, h, leaf)
            for k in range(h):
                j = s0 + k
                if j >= m:
                    j -= m
                if counts:
                    _full_extremes(mx[1], cx[1], mn[1], cn[1], t,
                                   &fmax, &fmaxc, &fmax_first, &fmin, &fminc, &fmin_first)
                    _value_count(fmax, fmaxc, fmin, fminc, &value, &cnt)
                else:
                    _full_extremes(mx[1], 0, mn[1], 0, t,
                                   &fmax, &fmaxc, &fmax_first, &fmin, &fminc, &fmin_first)
                    value = fmax if fmax >= -fmin else -fmin
                    cnt = 0
                better = False
                if value > best:
                    best = value
                    count = cnt
                    better = True
                elif value == best:
                    count += cnt
                    better = p == wp and (j < wj or (j == wj and u < wu))
                if better:
                    wp = p
                    wj = j
                    wu = u
                    if fmax >= -fmin:
                        sign = 1
                        if fmax_first:
                            gap = _leftmost(mx, ad, P)
                        else:
                            gap = _leftmost(mn, ad, P) + h
                    else:
                        sign = -1
                        if fmin_first:
                            gap = _leftmost(mn, ad, P)
                        else:
                            gap = _leftmost(mx, ad, P) + h
                    res[2] = sign
                    res[6] = gap
                if k + 1 < h:
                    i = j + 1
                    if i == m:
                        i = 0
                    v = dirs[i].v
                    if v != u:
                        delta = -w[v] if dirs[i].fwd else w[v]
                        b = bidx[<size_t>u * n + v]
                        if b < h:
                            _side_add(mx, mn, cx, cn, ad, P, b, P, delta, counts)
                        else:
                            _side_add(mx, mn, cx, cn, ad, P, 0, b - h, delta, counts)
                        t += delta
    res[0] = best
    res[1] = count if counts else -1
    res[3] = wp
    res[4] = wj
    res[5] = wu
    free(bidx)
    free(dirs)
    free(buf)
    return 0


def wedge_scan(xs, ys, w, counts=True):
    cdef int n = len(xs)
    cdef bint with_counts = counts
    cdef int64_t res[7]
    cdef int rc = 0
    cdef int64_t* cx
    cdef int64_t* cy
    cdef int32_t* cw
    if n < 2:
        return (-1, 0 if counts else -1, 0, -1, -1, -1, -1)
    cx = _copy_i64(xs, n)
    cy = _copy_i64(ys, n)
    cw = _copy_i32(w, n)
    try:
        with nogil:
            rc = _wedge_core(cx, cy, cw, n, with_counts, res)
        if rc != 0:
            raise MemoryError()
        return (res[0], res[1], <int>res[2], <int>res[3], <int>res[4], <int>res[5], <int>res[6])
    finally:
        free(cx)
        free(cy)
        free(cw)


# ---------------------------------------------------------------- local search

cdef void _query(const int32_t* mx, const int32_t* mn, const int32_t* cx, const int32_t* cn,
                 const int32_t* ad, int i, int nl, int nr, int l, int r, int32_t acc,
                 Agg* out) noexcept nogil:
    cdef int mid
    cdef int32_t a
    if r <= nl or nr <= l:
        return
    if l <= nl and nr <= r:
        a = mx[i] + acc
        if a > out.mx:
            out.mx = a
            out.cx = cx[i]
        elif a == out.mx:
            out.cx += cx[i]
        a = mn[i] + acc
        if a < out.mn:
            out.mn = a
            out.cn = cn[i]
        elif a == out.mn:
            out.cn += cn[i]
        return
    acc += ad[i]
    mid = (nl + nr) >> 1
    _query(mx, mn, cx, cn, ad, 2 * i, nl, mid, l, r, acc, out)
    _query(mx, mn, cx, cn, ad, 2 * i + 1, mid, nr, l, r, acc, out)


cdef inline void _agg_merge(Agg* out, Agg* a, int32_t shift) noexcept nogil:
    cdef int32_t v
    if a.cx == 0 and a.cn == 0:
        return
    v = a.mx + shift
    if v > out.mx:
        out.mx = v
        out.cx = a.cx
    elif v == out.mx:
        out.cx += a.cx
    v = a.mn + shift
    if v < out.mn:
        out.mn = v
        out.cn = a.cn
    elif v == out.mn:
        out.cn += a.cn


cdef bint _try_flip(Forest* f, const int32_t* bidx, const int32_t* w, int v, int64_t xsum,
                    int32_t best, int64_t count) noexcept nogil:
    """True iff flipping ``v`` makes the key ``(D1, count)`` strictly smaller."""
    cdef int n = f.n
    cdef int h = f.h
    cdef int P = f.P
    cdef int32_t delta = -2 * w[v]
    cdef int64_t nt = xsum + delta
    cdef int32_t nb = <int32_t>(nt if nt >= 0 else -nt)
    cdef int64_t nc = 1
    cdef int u, b, l1, r1, l2, r2
    cdef size_t o
    cdef Agg inside, outside, half
    cdef int32_t t, fmax, fmaxc, fmin, fminc, value
    cdef bint ff, gf
    cdef int64_t cnt
    if nb > best:
        return False
    for u in range(n):
        o = <size_t>u * 2 * P
        t = f.tot[u]
        if u == v:
            _full_extremes(f.mx[o + 1], f.cx[o + 1], f.mn[o + 1], f.cn[o + 1], t,
                           &fmax, &fmaxc, &ff, &fmin, &fminc, &gf)
        else:
            b = bidx[<size_t>u * n + v]
            if b < h:
                l1 = b
                r1 = h
                l2 = 0
                r2 = b
            else:
                l1 = 0
                r1 = b - h
                l2 = b - h
                r2 = h
            inside.mx = -BIG
            inside.mn = BIG
            inside.cx = 0
            inside.cn = 0
            outside = inside
            half = inside
            _query(f.mx + o, f.mn + o, f.cx + o, f.cn + o, f.ad + o, 1, 0, P, l1, r1, 0, &inside)
            _query(f.mx + o, f.mn + o, f.cx + o, f.cn + o, f.ad + o, 1, 0, P, l2, r2, 0, &outside)
            _agg_merge(&half, &inside, delta)
            _agg_merge(&half, &outside, 0)
            _full_extremes(half.mx, half.cx, half.mn, half.cn, t + delta,
                           &fmax, &fmaxc, &ff, &fmin, &fminc, &gf)
        _value_count(fmax, fmaxc, fmin, fminc, &value, &cnt)
        if value > nb:
            nb = value
            nc = cnt
        elif value == nb:
            nc += cnt
        if nb > best or (nb == best and nc >= count):
            return False
    return True


cdef void _key(Forest* f, int64_t xsum, int32_t* best, int64_t* count) noexcept nogil:
    cdef int u
    cdef size_t o
    cdef int32_t fmax, fmaxc, fmin, fminc, value
    cdef bint ff, gf
    cdef int64_t cnt
    best[0] = <int32_t>(xsum if xsum >= 0 else -xsum)
    count[0] = 1
    for u in range(f.n):
        o = <size_t>u * 2 * f.P
        _full_extremes(f.mx[o + 1], f.cx[o + 1], f.mn[o + 1], f.cn[o + 1], f.tot[u],
                       &fmax, &fmaxc, &ff, &fmin, &fminc, &gf)
        _value_count(fmax, fmaxc, fmin, fminc, &value, &cnt)
        if value > best[0]:
            best[0] = value
            count[0] = cnt
        elif value == best[0]:
            count[0] += cnt


cdef int _search_core(const int64_t* xs, const int64_t* ys, int32_t* w, int n, int64_t max_flips,
                      int64_t* res) noexcept nogil:
    cdef Forest f
    cdef int32_t* bidx
    cdef int v, i
    cdef int64_t xsum = 0
    cdef int64_t flips = 0
    cdef int idle = 0
    cdef int32_t best
    cdef int64_t count
    _forest_zero(&f)
    bidx = _all_backward(xs, ys, n)
    if bidx == NULL:
        return -1
    if _forest_init(&f, n) != 0:
        free(bidx)
        _forest_free(&f)
        return -1
    _forest_reset(&f)
    for v in range(n):
        xsum += w[v]
        _forest_update(&f, bidx, v, w[v])
    _key(&f, xsum, &best, &count)
    i = 0
    while flips < max_flips and idle < n:
        if _try_flip(&f, bidx, w, i, xsum, best, count):
            _forest_update(&f, bidx, i, -2 * w[i])
            xsum -= 2 * w[i]
            w[i] = -w[i]
            _key(&f, xsum, &best, &count)
            flips += 1
            idle = 0
        else:
            idle += 1
        i = (i + 1) % n
    res[0] = flips
    res[1] = best
    res[2] = count
    free(bidx)
    _forest_free(&f)
    return 0


def local_search_d1(xs, ys, w, max_flips):
    cdef int n = len(xs)
    cdef int64_t res[3]
    cdef int rc = 0
    cdef int64_t mf = max_flips
    cdef int64_t* cx
    cdef int64_t* cy
    cdef int32_t* cw
    if n < 2:
        from ._fallback import local_search_d1 as slow
        return slow(xs, ys, w, max_flips)
    cx = _copy_i64(xs, n)
    cy = _copy_i64(ys, n)
    cw = _copy_i32(w, n)
    try:
        with nogil:
            rc = _search_core(cx, cy, cw, n, mf, res)
        if rc != 0:
            raise MemoryError()
        return [cw[i] for i in range(n)], res[0], res[1], res[2]
    finally:
        free(cx)
        free(cy)
        free(cw)
