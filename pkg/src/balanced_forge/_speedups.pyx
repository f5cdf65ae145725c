# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the _mbc_pure kernels.

Same contracts, same traversal order, same results: direct_search
returns (masks, numerators, denominator) triples and cover_search
returns (masks, multiplicities) pairs, plain ints only. The elimination
values here live in C integers, which is safe because every entry is a
minor of a 0/1 incidence matrix after gcd normalization, far below the
int64 range for the supported player counts.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset

cdef enum:
    WIDTH = 16          # row stride: n + 1 + n <= 15 for n <= 7
    MAXN = 8


cdef inline int64_t _iabs(int64_t x) nogil:
    return -x if x < 0 else x


cdef inline int64_t _gcd(int64_t a, int64_t b) nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _norm(int64_t *row, int width) nogil:
    cdef int64_t g = 0
    cdef int i
    for i in range(width):
        if row[i]:
            g = _gcd(g, _iabs(row[i]))
    if g > 1:
        for i in range(width):
            row[i] = row[i] / g


cdef void _drec(int n, int width, int nmasks, int cursor, int limit, int depth,
                int64_t *rows, int *pivots, int64_t *rhos, int *chosen, list out):
    cdef int m, i, j, p, ok
    cdef int64_t a, b, s
    cdef int64_t row[WIDTH]
    cdef int64_t *rho = rhos + depth * WIDTH
    cdef int64_t *r2 = rhos + (depth + 1) * WIDTH
    for m in range(cursor, limit):
        for i in range(n):
            row[i] = (m >> i) & 1
        for i in range(n, width):
            row[i] = 0
        row[n + 1 + depth] = 1
        for j in range(depth):
            p = pivots[j]
            if row[p]:
                a = rows[j * WIDTH + p]
                b = row[p]
                for i in range(width):
                    row[i] = a * row[i] - b * rows[j * WIDTH + i]
                _norm(row, width)
        p = -1
        for i in range(n):
            if row[i]:
                p = i
                break
        if p < 0:
            continue
        if rho[p]:
            a = row[p]
            b = rho[p]
            for i in range(width):
                r2[i] = a * rho[i] - b * row[i]
            _norm(r2, width)
        else:
            for i in range(width):
                r2[i] = rho[i]
        chosen[depth] = m
        ok = 1
        for i in range(n):
            if r2[i]:
                ok = 0
                break
        if not ok:
            for i in range(width):
                rows[depth * WIDTH + i] = row[i]
            pivots[depth] = p
            _drec(n, width, nmasks, m + 1, nmasks, depth + 1,
                  rows, pivots, rhos, chosen, out)
        else:
            s = r2[n]
            if s < 0:
                s = -s
                for j in range(depth + 1):
                    r2[n + 1 + j] = -r2[n + 1 + j]
            ok = 1
            for j in range(depth + 1):
                if r2[n + 1 + j] >= 0:
                    ok = 0
                    break
            if ok:
                out.append((
                    tuple(chosen[j] for j in range(depth + 1)),
                    tuple(-r2[n + 1 + j] for j in range(depth + 1)),
                    s,
                ))


def direct_search(int n, int first=0):
    """Minimal balanced collections as (masks, numerators, denominator).

    With first > 0 only the subtree whose smallest member is `first` is
    searched; first = 0 runs the whole tree.
    """
    if not 1 <= n <= 7:
        raise ValueError("direct kernel supports 1 <= n <= 7, got %d" % n)
    cdef int nmasks = 1 << n
    cdef int width = 2 * n + 1
    cdef int64_t rows[MAXN * WIDTH]
    cdef int64_t rhos[(MAXN + 1) * WIDTH]
    cdef int pivots[MAXN]
    cdef int chosen[MAXN]
    cdef int i
    memset(rows, 0, sizeof(rows))
    memset(rhos, 0, sizeof(rhos))
    for i in range(n + 1):
        rhos[i] = 1
    out = []
    if first:
        _drec(n, width, nmasks, first, first + 1, 0, rows, pivots, rhos, chosen, out)
    else:
        _drec(n, width, nmasks, 1, nmasks, 0, rows, pivots, rhos, chosen, out)
    return out


# ---------------------------------------------------------------- covers


cdef struct CoverCtx:
    int n
    int k
    int nmasks
    int nwords
    uint64_t **vm          # per-mask positions where one more copy is legal
    int64_t *off           # per-mask encoding increment
    int64_t *tpos          # target bit positions, k-1 of them
    uint64_t *scratch


cdef inline void _shift_or(uint64_t *dst, uint64_t *src, int nwords,
                           int64_t off) nogil:
    # dst |= src << off, within a fixed nwords window
    cdef int ws = <int> (off >> 6)
    cdef int bs = <int> (off & 63)
    cdef int w
    cdef uint64_t x
    if bs == 0:
        for w in range(nwords - 1, ws - 1, -1):
            dst[w] |= src[w - ws]
    else:
        for w in range(nwords - 1, ws - 1, -1):
            x = src[w - ws] << bs
            if w - ws - 1 >= 0:
                x |= src[w - ws - 1] >> (64 - bs)
            dst[w] |= x


cdef int _crec(CoverCtx *ctx, int cursor, int depth, int *rem, int rem_total,
               int *chosen, int *mults, uint64_t *dp, list out) except -1:
    cdef int s, i, c, cmax, pc, w, d, hit
    cdef int rem2[MAXN]
    cdef uint64_t *dp2
    cdef int n = ctx.n
    cdef int nwords = ctx.nwords
    if rem_total == 0:
        out.append((
            tuple(chosen[i] for i in range(depth)),
            tuple(mults[i] for i in range(depth)),
        ))
        return 0
    if depth >= n:
        return 0
    for s in range(cursor, ctx.nmasks):
        cmax = ctx.k + 1
        pc = 0
        for i in range(n):
            if s >> i & 1:
                pc += 1
                if rem[i] < cmax:
                    cmax = rem[i]
        if cmax <= 0:
            continue
        for i in range(n):
            rem2[i] = rem[i]
        dp2 = <uint64_t *> malloc(nwords * sizeof(uint64_t))
        if dp2 == NULL:
            raise MemoryError()
        memcpy(dp2, dp, nwords * sizeof(uint64_t))
        chosen[depth] = s
        try:
            for c in range(1, cmax + 1):
                for i in range(n):
                    if s >> i & 1:
                        rem2[i] -= 1
                for w in range(nwords):
                    ctx.scratch[w] = dp2[w] & ctx.vm[s][w]
                _shift_or(dp2, ctx.scratch, nwords, ctx.off[s])
                hit = 0
                for d in range(ctx.k - 1):
                    if dp2[ctx.tpos[d] >> 6] >> (ctx.tpos[d] & 63) & 1:
                        hit = 1
                        break
                if hit:
                    break
                mults[depth] = c
                _crec(ctx, s + 1, depth + 1, rem2, rem_total - c * pc,
                      chosen, mults, dp2, out)
        finally:
            free(dp2)
    return 0


cdef void _set_range(uint64_t *bits, int64_t lo, int64_t hi) nogil:
    # set bit positions [lo, hi)
    cdef int64_t wlo = lo >> 6
    cdef int64_t whi = (hi - 1) >> 6
    cdef int64_t w
    cdef uint64_t lomask = (<uint64_t> 0xFFFFFFFFFFFFFFFF) << (lo & 63)
    cdef uint64_t himask = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (63 - ((hi - 1) & 63))
    if wlo == whi:
        bits[wlo] |= lomask & himask
        return
    bits[wlo] |= lomask
    for w in range(wlo + 1, whi):
        bits[w] = <uint64_t> 0xFFFFFFFFFFFFFFFF
    bits[whi] |= himask


def cover_search(int n, int k):
    """Minimally regular exact k-covers as (masks, multiplicities)."""
    if not 1 <= n <= 7:
        raise ValueError("cover kernel supports 1 <= n <= 7, got %d" % n)
    if k < 1:
        raise ValueError("k must be >= 1, got %d" % k)
    cdef int base = k if k >= 2 else 2
    cdef int64_t npos = 1
    cdef int i, s, w
    for i in range(n):
        npos *= base
        if npos > (<int64_t> 1) << 28:
            raise ValueError("cover state space too large: base %d, n %d" % (base, n))
    cdef int nmasks = 1 << n
    cdef int nwords = <int> ((npos + 63) >> 6)
    cdef int64_t place[MAXN]
    place[0] = 1
    for i in range(1, n):
        place[i] = place[i - 1] * base

    cdef CoverCtx ctx
    ctx.n = n
    ctx.k = k
    ctx.nmasks = nmasks
    ctx.nwords = nwords
    ctx.vm = NULL
    ctx.off = NULL
    ctx.tpos = NULL
    ctx.scratch = NULL

    cdef uint64_t **digit_ok = NULL
    cdef uint64_t *dp = NULL
    cdef int64_t span, period, start, ones
    cdef int rem[MAXN]
    cdef int chosen[MAXN]
    cdef int mults[MAXN]
    out = []
    try:
        digit_ok = <uint64_t **> malloc(n * sizeof(uint64_t *))
        if digit_ok == NULL:
            raise MemoryError()
        for i in range(n):
            digit_ok[i] = NULL
        for i in range(n):
            digit_ok[i] = <uint64_t *> malloc(nwords * sizeof(uint64_t))
            if digit_ok[i] == NULL:
                raise MemoryError()
            memset(digit_ok[i], 0, nwords * sizeof(uint64_t))
            if k >= 2:
                span = place[i]
                period = span * base
                start = 0
                while start < npos:
                    _set_range(digit_ok[i], start, start + span * (k - 1))
                    start += period

        ctx.vm = <uint64_t **> malloc(nmasks * sizeof(uint64_t *))
        ctx.off = <int64_t *> malloc(nmasks * sizeof(int64_t))
        if ctx.vm == NULL or ctx.off == NULL:
            raise MemoryError()
        for s in range(nmasks):
            ctx.vm[s] = NULL
            ctx.off[s] = 0
        for s in range(1, nmasks):
            ctx.vm[s] = <uint64_t *> malloc(nwords * sizeof(uint64_t))
            if ctx.vm[s] == NULL:
                raise MemoryError()
            memset(ctx.vm[s], 0xFF, nwords * sizeof(uint64_t))
            if npos & 63:
                ctx.vm[s][nwords - 1] = ((<uint64_t> 1) << (npos & 63)) - 1
            for i in range(n):
                if s >> i & 1:
                    ctx.off[s] += place[i]
                    for w in range(nwords):
                        ctx.vm[s][w] &= digit_ok[i][w]

        ones = 0
        for i in range(n):
            ones += place[i]
        ctx.tpos = <int64_t *> malloc((k if k > 1 else 1) * sizeof(int64_t))
        if ctx.tpos == NULL:
            raise MemoryError()
        for i in range(k - 1):
            ctx.tpos[i] = (i + 1) * ones

        ctx.scratch = <uint64_t *> malloc(nwords * sizeof(uint64_t))
        dp = <uint64_t *> malloc(nwords * sizeof(uint64_t))
        if ctx.scratch == NULL or dp == NULL:
            raise MemoryError()
        memset(dp, 0, nwords * sizeof(uint64_t))
        dp[0] = 1

        for i in range(n):
            rem[i] = k
        _crec(&ctx, 1, 0, rem, n * k, chosen, mults, dp, out)
    finally:
        if dp != NULL:
            free(dp)
        if ctx.scratch != NULL:
            free(ctx.scratch)
        if ctx.tpos != NULL:
            free(ctx.tpos)
        if ctx.off != NULL:
            free(ctx.off)
        if ctx.vm != NULL:
            for s in range(nmasks):
                if ctx.vm[s] != NULL:
                    free(ctx.vm[s])
            free(ctx.vm)
        if digit_ok != NULL:
            for i in range(n):
                if digit_ok[i] != NULL:
                    free(digit_ok[i])
            free(digit_ok)
    return out
