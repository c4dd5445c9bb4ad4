# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cycle kernel; see _cycles_py for the contract and the pure twin."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Graph:
    int nv
    int words
    int *off
    int *flat
    unsigned long long *bits


cdef int _build(object adj, Graph *g) except -1:
    cdef int nv = len(adj)
    cdef Py_ssize_t total = 0
    for row in adj:
        total += len(row)
    g.nv = nv
    g.words = (nv + 63) >> 6
    g.off = <int *> malloc((nv + 1) * sizeof(int))
    g.flat = <int *> malloc((total if total else 1) * sizeof(int))
    g.bits = <unsigned long long *> malloc(nv * g.words * sizeof(unsigned long long))
    if not g.off or not g.flat or not g.bits:
        _release(g)
        raise MemoryError()
    memset(g.bits, 0, nv * g.words * sizeof(unsigned long long))
    cdef int i = 0, v = 0, w
    g.off[0] = 0
    for row in adj:
        for w in row:
            g.flat[i] = w
            g.bits[v * g.words + (w >> 6)] |= (<unsigned long long> 1) << (w & 63)
            i += 1
        v += 1
        g.off[v] = i
    return 0


cdef void _release(Graph *g) noexcept:
    free(g.off)
    free(g.flat)
    free(g.bits)


cdef inline bint _adjacent(Graph *g, int u, int v) noexcept nogil:
    return (g.bits[u * g.words + (v >> 6)] >> (v & 63)) & 1


cdef long long _count(Graph *g, int length, unsigned long long required,
                      int start_lo, int start_hi,
                      int *path, int *iters, unsigned long long *used,
                      char *in_path) noexcept nogil:
    cdef long long total = 0
    cdef int s, d, w, cur, last = length - 1
    cdef unsigned long long u2
    for s in range(start_lo, start_hi):
        if g.off[s + 1] - g.off[s] < 2:
            continue
        path[0] = s
        in_path[s] = 1
        used[0] = 0
        iters[0] = g.off[s]
        d = 0
        while d >= 0:
            cur = path[d]
            if iters[d] < g.off[cur + 1]:
                w = g.flat[iters[d]]
                iters[d] += 1
                if w <= s or in_path[w]:
                    continue
                if __builtin_popcountll(<unsigned long long> (w ^ s)) > length - d - 1:
                    continue
                u2 = used[d] | ((<unsigned long long> 1) << __builtin_ctzll(<unsigned long long> (cur ^ w)))
                if required != 0 and 2 * __builtin_popcountll(required & ~u2) > length - d - 1:
                    continue
                if d + 1 == last:
                    if w > path[1] and _adjacent(g, w, s):
                        if required == 0 or (u2 | ((<unsigned long long> 1) << __builtin_ctzll(<unsigned long long> (w ^ s)))) == required:
                            total += 1
                    continue
                d += 1
                path[d] = w
                used[d] = u2
                iters[d] = g.off[w]
                in_path[w] = 1
            else:
                in_path[cur] = 0
                d -= 1
    return total


cdef long long _find(Graph *g, int length, unsigned long long required,
                     int *path, int *iters, unsigned long long *used,
                     char *in_path, long long *nodes) noexcept nogil:
    cdef int s, d, w, cur, last = length - 1
    cdef unsigned long long u2
    for s in range(g.nv):
        if g.off[s + 1] - g.off[s] < 2:
            continue
        nodes[0] += 1
        path[0] = s
        in_path[s] = 1
        used[0] = 0
        iters[0] = g.off[s]
        d = 0
        while d >= 0:
            cur = path[d]
            if iters[d] < g.off[cur + 1]:
                w = g.flat[iters[d]]
                iters[d] += 1
                nodes[0] += 1
                if w <= s or in_path[w]:
                    continue
                if __builtin_popcountll(<unsigned long long> (w ^ s)) > length - d - 1:
                    continue
                u2 = used[d] | ((<unsigned long long> 1) << __builtin_ctzll(<unsigned long long> (cur ^ w)))
                if required != 0 and 2 * __builtin_popcountll(required & ~u2) > length - d - 1:
                    continue
                if d + 1 == last:
                    if w > path[1] and _adjacent(g, w, s):
                        if required == 0 or (u2 | ((<unsigned long long> 1) << __builtin_ctzll(<unsigned long long> (w ^ s)))) == required:
                            path[last] = w
                            return 1
                    continue
                d += 1
                path[d] = w
                used[d] = u2
                iters[d] = g.off[w]
                in_path[w] = 1
            else:
                in_path[cur] = 0
                d -= 1
    return 0


def count_cycles_kernel(adj, int length, unsigned long long required_mask=0,
                        int start_lo=0, start_hi=None):
    cdef Graph g
    g.off = NULL
    g.flat = NULL
    g.bits = NULL
    _build(adj, &g)
    cdef int hi = g.nv if start_hi is None else min(<int> start_hi, g.nv)
    cdef int lo = max(start_lo, 0)
    cdef int *path = <int *> malloc(length * sizeof(int))
    cdef int *iters = <int *> malloc(length * sizeof(int))
    cdef unsigned long long *used = <unsigned long long *> malloc(length * sizeof(unsigned long long))
    cdef char *in_path = <char *> malloc(g.nv)
    cdef long long res = 0
    if not path or not iters or not used or not in_path:
        free(path); free(iters); free(used); free(in_path)
        _release(&g)
        raise MemoryError()
    memset(in_path, 0, g.nv)
    try:
        with nogil:
            res = _count(&g, length, required_mask, lo, hi, path, iters, used, in_path)
    finally:
        free(path); free(iters); free(used); free(in_path)
        _release(&g)
    return res


def find_cycle_kernel(adj, int length, unsigned long long required_mask=0):
    cdef Graph g
    g.off = NULL
    g.flat = NULL
    g.bits = NULL
    _build(adj, &g)
    cdef int *path = <int *> malloc(length * sizeof(int))
    cdef int *iters = <int *> malloc(length * sizeof(int))
    cdef unsigned long long *used = <unsigned long long *> malloc(length * sizeof(unsigned long long))
    cdef char *in_path = <char *> malloc(g.nv if g.nv else 1)
    cdef long long nodes = 0
    cdef long long found = 0
    if not path or not iters or not used or not in_path:
        free(path); free(iters); free(used); free(in_path)
        _release(&g)
        raise MemoryError()
    memset(in_path, 0, g.nv if g.nv else 1)
    try:
        with nogil:
            found = _find(&g, length, required_mask, path, iters, used, in_path, &nodes)
        if found:
            return tuple(path[i] for i in range(length)), nodes
        return None, nodes
    finally:
        free(path); free(iters); free(used); free(in_path)
        _release(&g)
