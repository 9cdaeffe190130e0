# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled lattice scan kernels.

Same contracts as _scan_py (the pure reference implementation): integer
rows a @ x <= b, integer boxes, points visited in lexicographic order.
Callers guarantee all intermediate values fit in int64; kernels.py routes
anything larger to the pure backend.
"""

from libc.stdlib cimport free, malloc

ctypedef long long i64


cdef inline i64 _floordiv(i64 a, i64 b) noexcept:
    # cython compiles // on signed ints to floor division
    return a // b

cdef inline i64 _ceildiv(i64 a, i64 b) noexcept:
    return -((-a) // b)


cdef struct Scan:
    int d
    int m
    i64* coeffs      # m rows of length d
    i64* rhs         # m
    i64* lo          # d
    i64* hi          # d
    i64* minrest     # m rows of length d+1
    i64* partial     # (d+1) levels of m partial sums
    i64* x           # d current coordinates
    i64* cl          # d per-depth interval bounds
    i64* ch
    int depth        # -1 exhausted, else deepest committed coordinate


cdef int _scan_alloc(Scan* s, int d, int m) except -1:
    s.d = d
    s.m = m
    s.coeffs = <i64*> malloc(sizeof(i64) * (m * d + m + 4 * d +
                                            m * (d + 1) + (d + 1) * m))
    if s.coeffs == NULL:
        raise MemoryError()
    s.rhs = s.coeffs + m * d
    s.lo = s.rhs + m
    s.hi = s.lo + d
    s.cl = s.hi + d
    s.ch = s.cl + d
    s.minrest = s.ch + d
    s.partial = s.minrest + m * (d + 1)
    s.x = <i64*> malloc(sizeof(i64) * d)
    if s.x == NULL:
        free(s.coeffs)
        s.coeffs = NULL
        raise MemoryError()
    return 0


cdef void _scan_free(Scan* s) noexcept:
    if s.coeffs != NULL:
        free(s.coeffs)
        s.coeffs = NULL
    if s.x != NULL:
        free(s.x)
        s.x = NULL


cdef int _scan_load(Scan* s, coeffs, rhs, lo, hi) except -1:
    cdef int i, j
    for i in range(s.m):
        row = coeffs[i]
        for j in range(s.d):
            s.coeffs[i * s.d + j] = row[j]
        s.rhs[i] = rhs[i]
    for j in range(s.d):
        s.lo[j] = lo[j]
        s.hi[j] = hi[j]
    return 0


cdef void _scan_reset(Scan* s) noexcept:
    """Recompute minrest and park the odometer before the first point."""
    cdef int i, j
    cdef i64 c
    for j in range(s.d):
        if s.lo[j] > s.hi[j]:
            s.depth = -1
            return
    for i in range(s.m):
        s.minrest[i * (s.d + 1) + s.d] = 0
        for j in range(s.d - 1, -1, -1):
            c = s.coeffs[i * s.d + j]
            s.minrest[i * (s.d + 1) + j] = (
                s.minrest[i * (s.d + 1) + j + 1]
                + (c * s.lo[j] if c >= 0 else c * s.hi[j]))
        s.partial[i] = 0
    if s.d == 0:
        s.depth = -1
        return
    s.depth = 0
    if _scan_bounds(s, 0):
        s.x[0] = s.cl[0] - 1
    else:
        s.cl[0] = 1
        s.ch[0] = 0
        s.x[0] = 0


cdef bint _scan_bounds(Scan* s, int j) noexcept:
    """Tighten [cl[j], ch[j]] against every row; 0 when provably empty."""
    cdef int i
    cdef i64 c, rem, b
    s.cl[j] = s.lo[j]
    s.ch[j] = s.hi[j]
    for i in range(s.m):
        c = s.coeffs[i * s.d + j]
        rem = (s.rhs[i] - s.partial[j * s.m + i]
               - s.minrest[i * (s.d + 1) + j + 1])
        if c > 0:
            b = _floordiv(rem, c)
            if b < s.ch[j]:
                s.ch[j] = b
        elif c < 0:
            b = _ceildiv(rem, c)
            if b > s.cl[j]:
                s.cl[j] = b
        elif rem < 0:
            return 0
    return s.cl[j] <= s.ch[j]


cdef bint _scan_next(Scan* s) noexcept:
    """Advance to the next solution; x holds it when 1 is returned."""
    cdef int j = s.depth
    cdef int i
    if j < 0:
        return 0
    while True:
        s.x[j] += 1
        if s.x[j] > s.ch[j]:
            j -= 1
            if j < 0:
                s.depth = -1
                return 0
            continue
        for i in range(s.m):
            s.partial[(j + 1) * s.m + i] = (
                s.partial[j * s.m + i] + s.coeffs[i * s.d + j] * s.x[j])
        if j == s.d - 1:
            s.depth = j
            return 1
        j += 1
        if _scan_bounds(s, j):
            s.x[j] = s.cl[j] - 1
        else:
            s.cl[j] = 1
            s.ch[j] = 0
            s.x[j] = 0


cdef tuple _point(Scan* s):
    cdef int j
    return tuple([s.x[j] for j in range(s.d)])


def scan_points(coeffs, rhs, lo, hi):
    cdef Scan s
    cdef int d = len(lo)
    cdef int m = len(coeffs)
    out = []
    _scan_alloc(&s, d, m)
    try:
        _scan_load(&s, coeffs, rhs, lo, hi)
        _scan_reset(&s)
        while _scan_next(&s):
            out.append(_point(&s))
    finally:
        _scan_free(&s)
    return out


def scan_first(coeffs, rhs, lo, hi):
    cdef Scan s
    cdef int d = len(lo)
    cdef int m = len(coeffs)
    _scan_alloc(&s, d, m)
    try:
        _scan_load(&s, coeffs, rhs, lo, hi)
        _scan_reset(&s)
        if _scan_next(&s):
            return _point(&s)
        return None
    finally:
        _scan_free(&s)


def scan_undecomposed(rcoeffs, rrhs, rlo, rhi,
                      pcoeffs, prhs, plo, phi,
                      qcoeffs, qrhs, qlo, qhi):
    cdef Scan outer, inner
    cdef int d = len(rlo)
    cdef int mr = len(rcoeffs)
    cdef int mp = len(pcoeffs)
    cdef int mq = len(qcoeffs)
    cdef int i, j
    cdef i64 acc, v
    cdef bint found
    _scan_alloc(&outer, d, mr)
    try:
        _scan_load(&outer, rcoeffs, rrhs, rlo, rhi)
        _scan_alloc(&inner, d, mp + mq)
        try:
            for i in range(mp):
                row = pcoeffs[i]
                for j in range(d):
                    inner.coeffs[i * d + j] = row[j]
            for i in range(mq):
                row = qcoeffs[i]
                for j in range(d):
                    inner.coeffs[(mp + i) * d + j] = -row[j]
            for i in range(mp):
                inner.rhs[i] = prhs[i]
            _scan_reset(&outer)
            while _scan_next(&outer):
                for j in range(d):
                    v = outer.x[j]
                    inner.lo[j] = plo[j] if plo[j] >= v - qhi[j] \
                        else v - qhi[j]
                    inner.hi[j] = phi[j] if phi[j] <= v - qlo[j] \
                        else v - qlo[j]
                for i in range(mq):
                    # rhs of the reflected row: b - q_row . z, and the
                    # stored coefficients are already -q_row
                    acc = qrhs[i]
                    for j in range(d):
                        acc += inner.coeffs[(mp + i) * d + j] * outer.x[j]
                    inner.rhs[mp + i] = acc
                _scan_reset(&inner)
                found = _scan_next(&inner)
                if not found:
                    return _point(&outer)
            return None
        finally:
            _scan_free(&inner)
    finally:
        _scan_free(&outer)
