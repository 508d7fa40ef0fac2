# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels with 64-bit counters; see ``_kernels_py`` for the contract."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t

cdef enum:
    MAXD = 32


cdef inline long _labs(long x) noexcept nogil:
    return -x if x < 0 else x


cdef void _prefix(int64_t* v, long total, int d, long* sizes, long* strides) noexcept nogil:
    cdef int ax
    cdef long idx
    for ax in range(d):
        if sizes[ax] == 1:
            continue
        for idx in range(total):
            if (idx // strides[ax]) % sizes[ax]:
                v[idx] += v[idx - strides[ax]]


cdef int64_t _box(int64_t* p, int d, long* strides, long* a, long* b) noexcept nogil:
    cdef int corner, j, neg, skip
    cdef long idx
    cdef int64_t total = 0
    for corner in range(1 << d):
        idx = 0
        neg = 0
        skip = 0
        for j in range(d):
            if (corner >> j) & 1:
                if a[j] == 0:
                    skip = 1
                    break
                idx += (a[j] - 1) * strides[j]
                neg ^= 1
            else:
                idx += b[j] * strides[j]
        if not skip:
            if neg:
                total -= p[idx]
            else:
                total += p[idx]
    return total


cdef int _interlace(int group, int r, long* x, long* blo, long* bhi) noexcept nogil:
    cdef int j
    if group % 2:
        for j in range(r - 1):
            blo[j] = x[j + 1]
            bhi[j] = x[j]
        if r > 0:
            blo[r - 1] = -x[r - 1]
            bhi[r - 1] = x[r - 1]
        return r
    for j in range(r - 2):
        blo[j] = x[j + 1]
        bhi[j] = x[j]
    if r >= 2:
        blo[r - 2] = _labs(x[r - 1])
        bhi[r - 2] = x[r - 2]
        return r - 1
    return 0


cdef void _strides(int d, long* sizes, long* strides) noexcept nogil:
    cdef int j
    if d == 0:
        return
    strides[d - 1] = 1
    for j in range(d - 2, -1, -1):
        strides[j] = strides[j + 1] * sizes[j + 1]


def count_chains(list groups, list los, list his):
    cdef int nrows = len(groups)
    cdef int t, j, d, d_next, dbox, empty
    cdef long total, idx, aj, bj
    cdef long sizes[MAXD]
    cdef long strides[MAXD]
    cdef long lo[MAXD]
    cdef long sizes_n[MAXD]
    cdef long strides_n[MAXD]
    cdef long lo_n[MAXD]
    cdef long x[MAXD]
    cdef long blo[MAXD]
    cdef long bhi[MAXD]
    cdef long a[MAXD]
    cdef long b[MAXD]
    cdef int64_t* prev = NULL
    cdef int64_t* cur = NULL
    cdef int64_t result
    cdef int group

    for t in range(nrows):
        if len(los[t]) > MAXD:
            raise ValueError("row too long for the compiled kernel")

    d_next = len(los[nrows - 1])
    total = 1
    for j in range(d_next):
        lo_n[j] = los[nrows - 1][j]
        sizes_n[j] = his[nrows - 1][j] - lo_n[j] + 1
        if sizes_n[j] <= 0:
            return 0
        total *= sizes_n[j]
    _strides(d_next, sizes_n, strides_n)
    prev = <int64_t*> malloc(total * sizeof(int64_t))
    if prev == NULL:
        raise MemoryError()
    for idx in range(total):
        prev[idx] = 1
    _prefix(prev, total, d_next, sizes_n, strides_n)

    try:
        for t in range(nrows - 2, -1, -1):
            d = len(los[t])
            group = groups[t]
            total = 1
            for j in range(d):
                lo[j] = los[t][j]
                sizes[j] = his[t][j] - lo[j] + 1
                if sizes[j] <= 0:
                    return 0
                total *= sizes[j]
                x[j] = lo[j]
            _strides(d, sizes, strides)
            cur = <int64_t*> calloc(total, sizeof(int64_t))
            if cur == NULL:
                raise MemoryError()
            with nogil:
                for idx in range(total):
                    dbox = _interlace(group, d, x, blo, bhi)
                    empty = 0
                    for j in range(dbox):
                        aj = blo[j] if blo[j] > lo_n[j] else lo_n[j]
                        bj = bhi[j] if bhi[j] < lo_n[j] + sizes_n[j] - 1 else lo_n[j] + sizes_n[j] - 1
                        if aj > bj:
                            empty = 1
                            break
                        a[j] = aj - lo_n[j]
                        b[j] = bj - lo_n[j]
                    if not empty:
                        cur[idx] = _box(prev, dbox, strides_n, a, b)
                    # odometer over the row, last coordinate fastest
                    j = d - 1
                    while j >= 0:
                        x[j] += 1
                        if x[j] < lo[j] + sizes[j]:
                            break
                        x[j] = lo[j]
                        j -= 1
                if t > 0:
                    _prefix(cur, total, d, sizes, strides)
            free(prev)
            prev = cur
            cur = NULL
            d_next = d
            for j in range(d):
                sizes_n[j] = sizes[j]
                strides_n[j] = strides[j]
                lo_n[j] = lo[j]
        result = prev[0]
    finally:
        free(prev)
        free(cur)
    return result


cdef struct Walk:
    int npaths
    long* sx
    long* sy
    long* ex
    long* ey
    char* occ
    long x0
    long y0
    long height


cdef inline long _cell(Walk* w, long x, long y) noexcept nogil:
    return (x - w.x0) * w.height + (y - w.y0)


cdef int64_t _walk(Walk* w, int i, long x, long y) noexcept nogil:
    cdef int64_t res = 0
    cdef long c
    if x == w.ex[i] and y == w.ey[i]:
        if i + 1 == w.npaths:
            return 1
        c = _cell(w, w.sx[i + 1], w.sy[i + 1])
        if w.occ[c]:
            return 0
        w.occ[c] = 1
        res = _walk(w, i + 1, w.sx[i + 1], w.sy[i + 1])
        w.occ[c] = 0
        return res
    if x < w.ex[i]:
        c = _cell(w, x + 1, y)
        if not w.occ[c]:
            w.occ[c] = 1
            res += _walk(w, i, x + 1, y)
            w.occ[c] = 0
    if y < w.ey[i]:
        c = _cell(w, x, y + 1)
        if not w.occ[c]:
            w.occ[c] = 1
            res += _walk(w, i, x, y + 1)
            w.occ[c] = 0
    return res


def count_nilp(starts, ends):
    cdef int n = len(starts)
    cdef int i
    cdef Walk w
    cdef long x1, y1
    cdef int64_t result
    if n == 0:
        return 1
    pts = [tuple(p) for p in starts] + [tuple(p) for p in ends]
    w.x0 = min(p[0] for p in pts)
    w.y0 = min(p[1] for p in pts)
    x1 = max(p[0] for p in pts)
    y1 = max(p[1] for p in pts)
    w.height = y1 - w.y0 + 1
    w.npaths = n
    w.sx = <long*> malloc(4 * n * sizeof(long))
    w.occ = <char*> calloc((x1 - w.x0 + 1) * w.height, 1)
    if w.sx == NULL or w.occ == NULL:
        free(w.sx)
        free(w.occ)
        raise MemoryError()
    w.sy = w.sx + n
    w.ex = w.sx + 2 * n
    w.ey = w.sx + 3 * n
    for i in range(n):
        w.sx[i] = starts[i][0]
        w.sy[i] = starts[i][1]
        w.ex[i] = ends[i][0]
        w.ey[i] = ends[i][1]
    try:
        w.occ[_cell(&w, w.sx[0], w.sy[0])] = 1
        with nogil:
            result = _walk(&w, 0, w.sx[0], w.sy[0])
    finally:
        free(w.sx)
        free(w.occ)
    return result
