# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_purepy``.

Same signatures, same visiting order.  ``max_chain`` works on 64-bit masks
and raises ``OverflowError`` for larger vertex sets; the dispatcher in
``kernels`` falls back to the pure version in that case.
"""

import time
from array import array

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef int CHECK_EVERY = 1024

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctz64(uint64_t x) nogil:
    return __builtin_ctzll(x)



def color_dp(colors, int N, int r, bint mono):
    cdef int[:] col = colors if isinstance(colors, array) else array("i", colors)
    cdef list vals = [1] * (N * r)
    cdef list preds = [-1] * (N * r)
    cdef int *v = <int *> malloc(sizeof(int) * N * r)
    cdef int *row_off = <int *> malloc(sizeof(int) * N)
    cdef int i, j, k, c, best, arg, x, cj
    try:
        row_off[0] = 0
        for i in range(1, N):
            row_off[i] = row_off[i - 1] + (N - i)
        for c in range(r):
            v[c] = 1
        for k in range(1, N):
            for c in range(r):
                best = 0
                arg = -1
                for j in range(k):
                    cj = col[row_off[j] + k - j - 1] - 1
                    if (cj == c) == mono:
                        x = v[j * r + c]
                        if x > best:
                            best = x
                            arg = j
                v[k * r + c] = best + 1
                vals[k * r + c] = best + 1
                preds[k * r + c] = arg
    finally:
        free(v)
        free(row_off)
    return vals, preds


cdef class _FState:
    cdef int E, target, npre, found
    cdef long long nodes, max_nodes
    cdef double deadline
    cdef bint exhausted
    cdef int *oj
    cdef int *ok
    cdef int *pre
    cdef int *assign
    cdef int *T


cdef bint _f_tick(_FState s):
    s.nodes += 1
    if s.nodes > s.max_nodes:
        s.exhausted = True
    elif s.deadline > 0 and s.nodes % CHECK_EVERY == 0 and time.monotonic() > s.deadline:
        s.exhausted = True
    return s.exhausted


cdef bint _f_rec(_FState s, int e, int c0, int c1, int c2, int used):
    cdef int j, k, col, hi, lo, n0, n1, n2, nu, t
    cdef bint last, okr
    if e == s.E:
        return True
    j = s.oj[e]
    k = s.ok[e]
    last = j == k - 1
    if e < s.npre:
        lo = s.pre[e]
        hi = lo
    else:
        lo = 1
        hi = used + 1 if used + 1 < 3 else 3
    t = s.target
    for col in range(lo, hi + 1):
        if _f_tick(s):
            return False
        n0 = c0 if (col == 1 or s.T[3 * j] <= c0) else s.T[3 * j]
        n1 = c1 if (col == 2 or s.T[3 * j + 1] <= c1) else s.T[3 * j + 1]
        n2 = c2 if (col == 3 or s.T[3 * j + 2] <= c2) else s.T[3 * j + 2]
        if n0 >= t or n1 >= t or n2 >= t:
            continue
        s.assign[e] = col
        nu = col if col > used else used
        if last:
            s.T[3 * k] = n0 + 1
            s.T[3 * k + 1] = n1 + 1
            s.T[3 * k + 2] = n2 + 1
            okr = _f_rec(s, e + 1, 0, 0, 0, nu)
        else:
            okr = _f_rec(s, e + 1, n0, n1, n2, nu)
        if okr:
            return True
        if s.exhausted:
            return False
    return False


def f_search(int N, int target, prefix, long long max_nodes, double deadline):
    if target < 1:
        return None, 0, False
    if N == 1:
        return [], 0, False
    cdef int E = N * (N - 1) // 2
    cdef _FState s = _FState()
    cdef int e, j, k, i
    cdef list flat
    s.E = E
    s.target = target
    s.npre = len(prefix)
    s.nodes = 0
    s.max_nodes = max_nodes
    s.deadline = deadline
    s.exhausted = False
    s.oj = <int *> malloc(sizeof(int) * E)
    s.ok = <int *> malloc(sizeof(int) * E)
    s.pre = <int *> malloc(sizeof(int) * (s.npre + 1))
    s.assign = <int *> malloc(sizeof(int) * E)
    s.T = <int *> malloc(sizeof(int) * 3 * N)
    try:
        e = 0
        for k in range(1, N):
            for j in range(k):
                s.oj[e] = j
                s.ok[e] = k
                e += 1
        for i in range(s.npre):
            s.pre[i] = prefix[i]
        s.T[0] = 1
        s.T[1] = 1
        s.T[2] = 1
        if not _f_rec(s, 0, 0, 0, 0, 0):
            return None, s.nodes, s.exhausted
        flat = [0] * E
        row_off = [0] * N
        for i in range(1, N):
            row_off[i] = row_off[i - 1] + (N - i)
        for e in range(E):
            flat[row_off[s.oj[e]] + s.ok[e] - s.oj[e] - 1] = s.assign[e]
        return flat, s.nodes, False
    finally:
        free(s.oj)
        free(s.ok)
        free(s.pre)
        free(s.assign)
        free(s.T)


cdef class _CState:
    cdef uint64_t *succ
    cdef uint64_t *groups
    cdef int *fam_len
    cdef int nfam
    cdef int *chain
    cdef int depth
    cdef int best
    cdef list best_chain
    cdef long long nodes, max_nodes
    cdef double deadline
    cdef bint exhausted


cdef inline int _bound(_CState s, uint64_t c):
    cdef int b = popcount64(c)
    cdef int f, g, t, pos = 0
    for f in range(s.nfam):
        t = 0
        for g in range(s.fam_len[f]):
            if s.groups[pos + g] & c:
                t += 1
                if t >= b:
                    break
        pos += s.fam_len[f]
        if t < b:
            b = t
    return b


cdef void _c_rec(_CState s, uint64_t c):
    cdef uint64_t rest, low
    cdef int v, i
    s.nodes += 1
    if s.nodes > s.max_nodes:
        s.exhausted = True
        return
    if s.deadline > 0 and s.nodes % CHECK_EVERY == 0 and time.monotonic() > s.deadline:
        s.exhausted = True
        return
    if s.depth > s.best:
        s.best = s.depth
        s.best_chain = [s.chain[i] for i in range(s.depth)]
    if c == 0 or s.depth + _bound(s, c) <= s.best:
        return
    rest = c
    while rest:
        low = rest & (~rest + 1)
        v = ctz64(low)
        rest ^= low
        s.chain[s.depth] = v
        s.depth += 1
        _c_rec(s, c & s.succ[v])
        s.depth -= 1
        if s.exhausted:
            return


def max_chain(succ, families, prefix, cand, int best_size, long long max_nodes, double deadline):
    cdef int nv = len(succ)
    if nv > 64:
        raise OverflowError("compiled max_chain supports at most 64 vertices")
    cdef _CState s = _CState()
    cdef int total = sum(len(g) for g in families)
    cdef int i, pos
    s.succ = <uint64_t *> malloc(sizeof(uint64_t) * (nv + 1))
    s.groups = <uint64_t *> malloc(sizeof(uint64_t) * (total + 1))
    s.fam_len = <int *> malloc(sizeof(int) * (len(families) + 1))
    s.chain = <int *> malloc(sizeof(int) * (nv + len(prefix) + 1))
    try:
        for i in range(nv):
            s.succ[i] = <uint64_t> succ[i]
        pos = 0
        s.nfam = len(families)
        for i, fam in enumerate(families):
            s.fam_len[i] = len(fam)
            for g in fam:
                s.groups[pos] = <uint64_t> g
                pos += 1
        s.depth = len(prefix)
        for i in range(s.depth):
            s.chain[i] = prefix[i]
        s.best = best_size
        s.best_chain = None
        s.nodes = 0
        s.max_nodes = max_nodes
        s.deadline = deadline
        s.exhausted = False
        _c_rec(s, <uint64_t> cand)
        return s.best_chain, s.nodes, s.exhausted
    finally:
        free(s.succ)
        free(s.groups)
        free(s.fam_len)
        free(s.chain)
