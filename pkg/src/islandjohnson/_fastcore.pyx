# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Same API and same outputs as ``_purecore``.  Determinants are evaluated
in 128-bit integers, which is exact provided every coordinate satisfies
|c| < 2**61; larger inputs raise OverflowError so the caller can fall
back to the arbitrary-precision kernel.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"
    int __builtin_popcountll(unsigned long long)

ctypedef long long i64
ctypedef unsigned long long u64

COORD_LIMIT = 1 << 61


cdef inline int _orient(i64 ax, i64 ay, i64 bx, i64 by, i64 cx, i64 cy) nogil:
    cdef i128 d = (<i128> (bx - ax)) * (<i128> (cy - ay)) \
        - (<i128> (by - ay)) * (<i128> (cx - ax))
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


cdef i64 _LIMIT = <i64> (1 << 61)


cdef inline i64 _checked(object v) except? -9223372036854775807:
    cdef i64 out = v
    if out >= _LIMIT or out <= -_LIMIT:
        raise OverflowError("coordinate exceeds compiled-kernel range")
    return out


cdef int _fill(object seq, i64 *dst, Py_ssize_t n) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        dst[i] = _checked(seq[i])
    return 0


def orientation(ax, ay, bx, by, cx, cy):
    return _orient(_checked(ax), _checked(ay), _checked(bx),
                   _checked(by), _checked(cx), _checked(cy))


cdef int _hull_of(i64 *xs, i64 *ys, Py_ssize_t *members, Py_ssize_t k,
                  Py_ssize_t *hull) nogil:
    # CCW hull (monotone chain) of the given indices; returns hull size.
    cdef Py_ssize_t srt[64]
    cdef Py_ssize_t i, j, tmp, m
    cdef Py_ssize_t a, b
    for i in range(k):
        srt[i] = members[i]
    # insertion sort by (x, y)
    for i in range(1, k):
        tmp = srt[i]
        j = i - 1
        while j >= 0 and (xs[srt[j]] > xs[tmp] or
                          (xs[srt[j]] == xs[tmp] and ys[srt[j]] > ys[tmp])):
            srt[j + 1] = srt[j]
            j -= 1
        srt[j + 1] = tmp
    if k <= 2:
        for i in range(k):
            hull[i] = srt[i]
        return k
    cdef Py_ssize_t lower[64]
    cdef Py_ssize_t upper[64]
    cdef Py_ssize_t nl = 0, nu = 0
    for i in range(k):
        while nl >= 2:
            a = lower[nl - 2]
            b = lower[nl - 1]
            if _orient(xs[a], ys[a], xs[b], ys[b], xs[srt[i]], ys[srt[i]]) <= 0:
                nl -= 1
            else:
                break
        lower[nl] = srt[i]
        nl += 1
    for i in range(k - 1, -1, -1):
        while nu >= 2:
            a = upper[nu - 2]
            b = upper[nu - 1]
            if _orient(xs[a], ys[a], xs[b], ys[b], xs[srt[i]], ys[srt[i]]) <= 0:
                nu -= 1
            else:
                break
        upper[nu] = srt[i]
        nu += 1
    m = 0
    for i in range(nl - 1):
        hull[m] = lower[i]
        m += 1
    for i in range(nu - 1):
        hull[m] = upper[i]
        m += 1
    return <int> m


cdef bint _contains_closed(i64 *xs, i64 *ys, Py_ssize_t *hull, Py_ssize_t m,
                           i64 qx, i64 qy) nogil:
    cdef Py_ssize_t a, b, t
    if m == 1:
        return qx == xs[hull[0]] and qy == ys[hull[0]]
    if m == 2:
        a = hull[0]
        b = hull[1]
        if _orient(xs[a], ys[a], xs[b], ys[b], qx, qy) != 0:
            return False
        if qx < (xs[a] if xs[a] < xs[b] else xs[b]):
            return False
        if qx > (xs[a] if xs[a] > xs[b] else xs[b]):
            return False
        if qy < (ys[a] if ys[a] < ys[b] else ys[b]):
            return False
        if qy > (ys[a] if ys[a] > ys[b] else ys[b]):
            return False
        return True
    for t in range(m):
        a = hull[t]
        b = hull[t + 1] if t + 1 < m else hull[0]
        if _orient(xs[a], ys[a], xs[b], ys[b], qx, qy) < 0:
            return False
    return True


cdef bint _is_island(i64 *xs, i64 *ys, Py_ssize_t n, Py_ssize_t *members,
                     Py_ssize_t k, bint *in_set) nogil:
    cdef Py_ssize_t hull[64]
    cdef Py_ssize_t m, q, i
    cdef i64 min_x, max_x, min_y, max_y
    m = _hull_of(xs, ys, members, k, hull)
    min_x = max_x = xs[hull[0]]
    min_y = max_y = ys[hull[0]]
    for i in range(1, m):
        if xs[hull[i]] < min_x:
            min_x = xs[hull[i]]
        if xs[hull[i]] > max_x:
            max_x = xs[hull[i]]
        if ys[hull[i]] < min_y:
            min_y = ys[hull[i]]
        if ys[hull[i]] > max_y:
            max_y = ys[hull[i]]
    for q in range(n):
        if in_set[q]:
            continue
        if xs[q] < min_x or xs[q] > max_x or ys[q] < min_y or ys[q] > max_y:
            continue
        if _contains_closed(xs, ys, hull, m, xs[q], ys[q]):
            return False
    return True


def is_island_members(xs, ys, members):
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t k = len(members)
    if k < 1:
        raise ValueError("empty member set")
    if k > 64:
        raise ValueError("subset too large for compiled kernel")
    cdef i64 *cx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cy = <i64 *> malloc(n * sizeof(i64))
    cdef bint *in_set = <bint *> malloc(n * sizeof(bint))
    cdef Py_ssize_t mem[64]
    cdef Py_ssize_t i
    cdef bint ok
    if cx == NULL or cy == NULL or in_set == NULL:
        free(cx); free(cy); free(in_set)
        raise MemoryError
    try:
        _fill(xs, cx, n)
        _fill(ys, cy, n)
        for i in range(n):
            in_set[i] = 0
        for i in range(k):
            mem[i] = members[i]
            in_set[mem[i]] = 1
        ok = _is_island(cx, cy, n, mem, k, in_set)
    finally:
        free(cx); free(cy); free(in_set)
    return bool(ok)


def islands_of_size(xs, ys, int k):
    cdef Py_ssize_t n = len(xs)
    if k < 1:
        raise ValueError("k must be at least 1")
    if k > 64:
        raise ValueError("subset too large for compiled kernel")
    cdef i64 *cx = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *cy = <i64 *> malloc(n * sizeof(i64))
    cdef bint *in_set = <bint *> malloc(n * sizeof(bint))
    cdef Py_ssize_t comb[64]
    cdef Py_ssize_t i, pos
    if cx == NULL or cy == NULL or in_set == NULL:
        free(cx); free(cy); free(in_set)
        raise MemoryError
    out = []
    try:
        _fill(xs, cx, n)
        _fill(ys, cy, n)
        for i in range(n):
            in_set[i] = 0
        if k > n:
            return out
        for i in range(k):
            comb[i] = i
            in_set[i] = 1
        while True:
            if _is_island(cx, cy, n, comb, k, in_set):
                out.append(tuple([comb[i] for i in range(k)]))
            # next lexicographic combination
            pos = k - 1
            while pos >= 0 and comb[pos] == n - k + pos:
                pos -= 1
            if pos < 0:
                break
            for i in range(pos, k):
                in_set[comb[i]] = 0
            comb[pos] += 1
            in_set[comb[pos]] = 1
            for i in range(pos + 1, k):
                comb[i] = comb[i - 1] + 1
                in_set[comb[i]] = 1
    finally:
        free(cx); free(cy); free(in_set)
    return out


def overlap_edges(members, int l):
    cdef Py_ssize_t nv = len(members)
    cdef u64 *masks = <u64 *> malloc(nv * sizeof(u64)) if nv else NULL
    cdef Py_ssize_t i, j
    cdef u64 m
    if nv and masks == NULL:
        raise MemoryError
    edges = []
    try:
        for i in range(nv):
            m = 0
            for idx in members[i]:
                if idx < 0 or idx > 63:
                    raise ValueError("index out of range for bitmask kernel")
                m |= (<u64> 1) << <int> idx
            masks[i] = m
        for i in range(nv):
            m = masks[i]
            for j in range(i + 1, nv):
                if __builtin_popcountll(m & masks[j]) == l:
                    edges.append((i, j))
    finally:
        free(masks)
    return edges


def high_above(xs_hi, ys_hi, xs_lo, ys_lo):
    cdef Py_ssize_t nh = len(xs_hi)
    cdef Py_ssize_t nl = len(xs_lo)
    cdef i64 *hx = <i64 *> malloc(nh * sizeof(i64)) if nh else NULL
    cdef i64 *hy = <i64 *> malloc(nh * sizeof(i64)) if nh else NULL
    cdef i64 *lx = <i64 *> malloc(nl * sizeof(i64)) if nl else NULL
    cdef i64 *ly = <i64 *> malloc(nl * sizeof(i64)) if nl else NULL
    cdef Py_ssize_t i, j, t, a, b
    cdef bint ok = True
    try:
        if nh:
            _fill(xs_hi, hx, nh)
            _fill(ys_hi, hy, nh)
        if nl:
            _fill(xs_lo, lx, nl)
            _fill(ys_lo, ly, nl)
        for i in range(nh):
            for j in range(i + 1, nh):
                if hx[i] == hx[j]:
                    ok = False
        if ok:
            for i in range(nl):
                for j in range(i + 1, nl):
                    if lx[i] == lx[j]:
                        ok = False
        if ok:
            for i in range(nh):
                for j in range(i + 1, nh):
                    a = i if hx[i] < hx[j] else j
                    b = j if a == i else i
                    for t in range(nl):
                        if _orient(hx[a], hy[a], hx[b], hy[b], lx[t], ly[t]) >= 0:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
        if ok:
            for i in range(nl):
                for j in range(i + 1, nl):
                    a = i if lx[i] < lx[j] else j
                    b = j if a == i else i
                    for t in range(nh):
                        if _orient(lx[a], ly[a], lx[b], ly[b], hx[t], hy[t]) <= 0:
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    break
    finally:
        free(hx); free(hy); free(lx); free(ly)
    return bool(ok)
