# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels for the distance engine.

Both entry points walk every combination of exactly ``w`` rows of a
redundancy matrix ``A`` (k x r, F_q encodings), first coefficient 1 and the
others ranging over F_q^*, in lexicographic order of (row, coefficient).  A
combination's codeword weight is ``w + wt(sum c_i A_i)``.

GF(2) and GF(3) use bitsliced 64-bit words; other fields go through the
supplied addition/multiplication tables byte by byte.
"""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memcpy

import numpy as np

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil

cdef enum:
    MAXW = 4
    MAXDEPTH = 160

cdef struct State:
    int k
    int r
    int W
    int w
    int q
    uint64_t* P1
    uint64_t* P2
    uint8_t* A
    uint8_t* addt
    uint8_t* mult
    uint8_t* accbuf
    int best
    int stop_at
    long long nodes
    long long budget
    int stopped
    int idx[MAXDEPTH]
    int coef[MAXDEPTH]
    int best_idx[MAXDEPTH]
    int best_coef[MAXDEPTH]
    int collect
    int target
    int* out
    long long cap
    long long nout
    int overflow


cdef inline void _hit(State* s, int wt) noexcept nogil:
    cdef int d
    cdef long long base
    if s.collect:
        if wt == s.target:
            if s.nout < s.cap:
                base = s.nout * 2 * s.w
                for d in range(s.w):
                    s.out[base + d] = s.idx[d]
                    s.out[base + s.w + d] = s.coef[d]
                s.nout += 1
            else:
                s.overflow = 1
    elif wt < s.best:
        s.best = wt
        for d in range(s.w):
            s.best_idx[d] = s.idx[d]
            s.best_coef[d] = s.coef[d]
        if wt <= s.stop_at:
            s.stopped = 1


cdef void _rec2(State* s, int depth, int start, const uint64_t* a) noexcept nogil:
    cdef uint64_t nv[MAXW]
    cdef int j, t, wt
    cdef int W = s.W
    cdef int last = depth == s.w - 1
    cdef int end = s.k - (s.w - 1 - depth)
    cdef const uint64_t* row
    for j in range(start, end):
        row = s.P1 + j * W
        for t in range(W):
            nv[t] = a[t] ^ row[t]
        s.idx[depth] = j
        s.coef[depth] = 1
        s.nodes += 1
        if last:
            wt = s.w
            for t in range(W):
                wt += popcount64(nv[t])
            _hit(s, wt)
        else:
            _rec2(s, depth + 1, j + 1, nv)
        if s.stopped:
            return
        if s.nodes > s.budget:
            s.stopped = 2
            return


cdef void _rec3(State* s, int depth, int start, const uint64_t* a1, const uint64_t* a2) noexcept nogil:
    cdef uint64_t n1[MAXW]
    cdef uint64_t n2[MAXW]
    cdef uint64_t x1, x2, y1, y2, tt
    cdef int j, c, t, wt
    cdef int W = s.W
    cdef int last = depth == s.w - 1
    cdef int end = s.k - (s.w - 1 - depth)
    cdef int cmax = 1 if depth == 0 else 2
    cdef const uint64_t* r1
    cdef const uint64_t* r2
    for j in range(start, end):
        for c in range(1, cmax + 1):
            if c == 1:
                r1 = s.P1 + j * W
                r2 = s.P2 + j * W
            else:
                r1 = s.P2 + j * W
                r2 = s.P1 + j * W
            wt = s.w
            for t in range(W):
                x1 = a1[t]
                x2 = a2[t]
                y1 = r1[t]
                y2 = r2[t]
                tt = (x1 | y2) ^ (x2 | y1)
                n1[t] = (x2 | y2) ^ tt
                n2[t] = (x1 | y1) ^ tt
            s.idx[depth] = j
            s.coef[depth] = c
            s.nodes += 1
            if last:
                for t in range(W):
                    wt += popcount64(n1[t] | n2[t])
                _hit(s, wt)
            else:
                _rec3(s, depth + 1, j + 1, n1, n2)
            if s.stopped:
                return
        if s.nodes > s.budget:
            s.stopped = 2
            return


cdef void _recg(State* s, int depth, int start) noexcept nogil:
    cdef int j, c, t, wt
    cdef int r = s.r
    cdef int q = s.q
    cdef int last = depth == s.w - 1
    cdef int end = s.k - (s.w - 1 - depth)
    cdef int cmax = 1 if depth == 0 else q - 1
    cdef const uint8_t* acc = s.accbuf + depth * r
    cdef uint8_t* nxt = s.accbuf + (depth + 1) * r
    cdef const uint8_t* row
    cdef const uint8_t* mrow
    for j in range(start, end):
        row = s.A + j * r
        for c in range(1, cmax + 1):
            mrow = s.mult + c * q
            wt = s.w
            for t in range(r):
                nxt[t] = s.addt[acc[t] * q + mrow[row[t]]]
                if nxt[t]:
                    wt += 1
            s.idx[depth] = j
            s.coef[depth] = c
            s.nodes += 1
            if last:
                _hit(s, wt)
            else:
                _recg(s, depth + 1, j + 1)
            if s.stopped:
                return
        if s.nodes > s.budget:
            s.stopped = 2
            return


cdef class _Prepared:
    cdef State s
    cdef object keep

    def __dealloc__(self):
        if self.s.P1 != NULL:
            free(self.s.P1)
        if self.s.P2 != NULL:
            free(self.s.P2)
        if self.s.accbuf != NULL:
            free(self.s.accbuf)
        if self.s.out != NULL:
            free(self.s.out)


cdef _Prepared _prepare(A, int q, int w, addt, mult):
    cdef _Prepared P = _Prepared()
    cdef State* s = &P.s
    cdef int i, t, W
    cdef uint8_t[:, ::1] Av
    cdef uint8_t[:, ::1] at
    cdef uint8_t[:, ::1] mt
    A8 = np.ascontiguousarray(A, dtype=np.uint8)
    if A8.ndim != 2:
        raise ValueError("A must be a matrix")
    if w > MAXDEPTH:
        raise ValueError(f"level {w} exceeds kernel depth {MAXDEPTH}")
    s.k = A8.shape[0]
    s.r = A8.shape[1]
    s.w = w
    s.q = q
    s.P1 = NULL
    s.P2 = NULL
    s.accbuf = NULL
    s.out = NULL
    s.nodes = 0
    s.stopped = 0
    s.collect = 0
    s.nout = 0
    s.overflow = 0
    W = (s.r + 63) // 64
    if W == 0:
        W = 1
    s.W = W
    Av = A8
    if (q == 2 or q == 3) and W <= MAXW:
        s.P1 = <uint64_t*> calloc(s.k * W + 1, sizeof(uint64_t))
        s.P2 = <uint64_t*> calloc(s.k * W + 1, sizeof(uint64_t))
        for i in range(s.k):
            for t in range(s.r):
                if Av[i, t] == 1:
                    s.P1[i * W + t // 64] |= (<uint64_t> 1) << (t % 64)
                elif Av[i, t] == 2:
                    s.P2[i * W + t // 64] |= (<uint64_t> 1) << (t % 64)
    else:
        if addt is None or mult is None:
            raise ValueError("tables required for this field")
        at8 = np.ascontiguousarray(addt, dtype=np.uint8)
        mt8 = np.ascontiguousarray(mult, dtype=np.uint8)
        P.keep = (A8, at8, mt8)
        at = at8
        mt = mt8
        s.A = &Av[0, 0] if s.k and s.r else NULL
        s.addt = &at[0, 0]
        s.mult = &mt[0, 0]
        s.accbuf = <uint8_t*> calloc((w + 2) * (s.r + 1), sizeof(uint8_t))
        s.q = -q  # marks the table path
    if P.keep is None:
        P.keep = (A8,)
    return P


cdef void _run(State* s) noexcept nogil:
    cdef uint64_t z1[MAXW]
    cdef uint64_t z2[MAXW]
    cdef int t
    for t in range(MAXW):
        z1[t] = 0
        z2[t] = 0
    if s.w < 1 or s.w > s.k:
        return
    if s.q == 2:
        _rec2(s, 0, 0, z1)
    elif s.q == 3:
        _rec3(s, 0, 0, z1, z2)
    else:
        s.q = -s.q
        _recg(s, 0, 0)
        s.q = -s.q


def enumerate_level(A, int q, int w, int best, int stop_at, long long budget, addt=None, mult=None):
    """Lowest-weight combination of exactly ``w`` rows that beats ``best``.

    Returns ``(best, indices, coeffs, nodes, status)``; status 0 = complete,
    1 = stopped because a weight <= ``stop_at`` was found, 2 = budget hit.
    """
    cdef _Prepared P = _prepare(A, q, w, addt, mult)
    cdef State* s = &P.s
    s.best = best
    s.stop_at = stop_at
    s.budget = budget
    with nogil:
        _run(s)
    indices, coeffs = [], []
    if s.best < best:
        indices = [s.best_idx[d] for d in range(w)]
        coeffs = [s.best_coef[d] for d in range(w)]
    return s.best, indices, coeffs, s.nodes, s.stopped


def collect_level(A, int q, int w, int target, long long cap, long long budget, addt=None, mult=None):
    """All combinations of exactly ``w`` rows whose codeword weight is ``target``.

    Returns ``(hits, nodes, status, overflow)`` where hits is an int array of
    shape (h, 2w): row indices followed by coefficients.
    """
    cdef _Prepared P = _prepare(A, q, w, addt, mult)
    cdef State* s = &P.s
    cdef long long i
    cdef int d
    s.collect = 1
    s.target = target
    s.cap = cap
    s.best = 1 << 30
    s.stop_at = -1
    s.budget = budget
    s.out = <int*> malloc((cap * 2 * w + 1) * sizeof(int))
    with nogil:
        _run(s)
    hits = np.empty((s.nout, 2 * w), dtype=np.int64)
    for i in range(s.nout):
        for d in range(2 * w):
            hits[i, d] = s.out[i * 2 * w + d]
    return hits, s.nodes, s.stopped, bool(s.overflow)
