# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking counter; same contract as ``_pykernel.count_backtrack``.

Targets are limited to 64 vertices (one machine word per mask).  Counts are
accumulated in 64-bit words with overflow checks; an overflow raises
``OverflowError`` and the caller reruns the count in pure Python.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int hl_add(unsigned long long a, unsigned long long b, unsigned long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int hl_mul(unsigned long long a, unsigned long long b, unsigned long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int hl_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int hl_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int hl_add(u64 a, u64 b, u64 *r) nogil
    int hl_mul(u64 a, u64 b, u64 *r) nogil
    int hl_popcount(u64 x) nogil
    int hl_ctz(u64 x) nogil


cdef struct Ctx:
    int m
    int tail
    u64 *nbr
    u64 *cur          # (m + 1) rows of m masks
    int *fwd_start    # CSR offsets into fwd
    int *fwd
    int overflow


cdef u64 _rec(Ctx *ctx, int p) noexcept nogil:
    cdef int m = ctx.m
    cdef u64 *row_p = ctx.cur + p * m
    cdef u64 total, r, cand, low, x, mask
    cdef u64 *row_n
    cdef int v, k, f, ok, c
    if p == ctx.tail:
        total = 1
        for v in range(ctx.tail, m):
            if hl_mul(total, <u64>hl_popcount(row_p[v]), &total):
                ctx.overflow = 1
                return 0
        return total
    total = 0
    cand = row_p[p]
    row_n = row_p + m
    while cand:
        c = hl_ctz(cand)
        cand &= cand - 1
        mask = ctx.nbr[c]
        memcpy(row_n, row_p, m * sizeof(u64))
        ok = 1
        for k in range(ctx.fwd_start[p], ctx.fwd_start[p + 1]):
            f = ctx.fwd[k]
            x = row_n[f] & mask
            if x == 0:
                ok = 0
                break
            row_n[f] = x
        if ok:
            r = _rec(ctx, p + 1)
            if ctx.overflow:
                return 0
            if hl_add(total, r, &total):
                ctx.overflow = 1
                return 0
    return total


def count_backtrack(nbr, doms, later, int tail):
    cdef int q = len(nbr)
    cdef int m = len(doms)
    cdef int i, k, nf
    cdef Ctx ctx
    cdef u64 result
    if q > 64:
        raise ValueError("compiled kernel supports at most 64 target vertices")
    for d in doms:
        if d == 0:
            return 0
    nf = sum(len(x) for x in later)
    ctx.m = m
    ctx.tail = tail
    ctx.overflow = 0
    ctx.nbr = <u64 *> malloc((q if q else 1) * sizeof(u64))
    ctx.cur = <u64 *> malloc(((m + 1) * m + 1) * sizeof(u64))
    ctx.fwd_start = <int *> malloc((m + 1) * sizeof(int))
    ctx.fwd = <int *> malloc((nf if nf else 1) * sizeof(int))
    if not ctx.nbr or not ctx.cur or not ctx.fwd_start or not ctx.fwd:
        free(ctx.nbr); free(ctx.cur); free(ctx.fwd_start); free(ctx.fwd)
        raise MemoryError()
    try:
        for i in range(q):
            ctx.nbr[i] = <u64> nbr[i]
        for i in range(m):
            ctx.cur[i] = <u64> doms[i]
        k = 0
        for i in range(m):
            ctx.fwd_start[i] = k
            for f in later[i]:
                ctx.fwd[k] = f
                k += 1
        ctx.fwd_start[m] = k
        with nogil:
            result = _rec(&ctx, 0)
        if ctx.overflow:
            raise OverflowError("count exceeds 64 bits")
        return result
    finally:
        free(ctx.nbr)
        free(ctx.cur)
        free(ctx.fwd_start)
        free(ctx.fwd)
