# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; semantics mirror ``_purekernels``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def count_pathsets(int n, list edges):
    cdef int m = len(edges)
    if m > 40:
        raise ValueError("too many edges for subset enumeration")
    if n == 1:
        from math import comb
        return [comb(m, i) for i in range(m + 1)]
    cdef int* eu = <int*> malloc(m * sizeof(int))
    cdef int* ev = <int*> malloc(m * sizeof(int))
    cdef int* parent = <int*> malloc(n * sizeof(int))
    cdef int64_t* counts = <int64_t*> malloc((m + 1) * sizeof(int64_t))
    cdef int i, j, comps, a, b, pc
    cdef uint64_t mask, total
    try:
        for i in range(m):
            eu[i] = edges[i][0]
            ev[i] = edges[i][1]
        for i in range(m + 1):
            counts[i] = 0
        total = (<uint64_t> 1) << m
        with nogil:
            mask = 0
            while mask < total:
                pc = __builtin_popcountll(mask)
                if pc >= n - 1:
                    for j in range(n):
                        parent[j] = j
                    comps = n
                    for i in range(m):
                        if (mask >> i) & 1:
                            a = _find(parent, eu[i])
                            b = _find(parent, ev[i])
                            if a != b:
                                parent[a] = b
                                comps -= 1
                                if comps == 1:
                                    break
                    if comps == 1:
                        counts[pc] += 1
                mask += 1
        return [counts[i] for i in range(m + 1)]
    finally:
        free(eu)
        free(ev)
        free(parent)
        free(counts)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def refine_simple(list adj, list cells, list splitters):
    cdef int n = 0
    cdef int ncells = len(cells)
    cdef int i, j, k, v, c, pos, start, size, lo, hi, nout, qhead, qtail, qcap
    cdef uint64_t w, mask
    for c in range(ncells):
        n += len(cells[c])
    if n > 64:
        raise ValueError("refine_simple supports at most 64 vertices")
    cdef uint64_t* a = <uint64_t*> malloc(n * sizeof(uint64_t))
    # partition: vertex order plus cell starts; pieces rebuilt each pass
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* cstart = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nstart = <int*> malloc((n + 1) * sizeof(int))
    cdef int* norder = <int*> malloc(n * sizeof(int))
    cdef int* cnt = <int*> malloc(n * sizeof(int))
    qcap = 4 * n + len(splitters) + 4
    cdef uint64_t* queue = <uint64_t*> malloc(qcap * sizeof(uint64_t))
    trace = []
    try:
        for v in range(n):
            a[v] = <uint64_t> adj[v]
        pos = 0
        for c in range(ncells):
            cstart[c] = pos
            for v in cells[c]:
                order[pos] = v
                pos += 1
        cstart[ncells] = n
        qhead = 0
        qtail = 0
        for i in splitters:
            mask = 0
            for j in range(cstart[i], cstart[i + 1]):
                mask |= (<uint64_t> 1) << order[j]
            queue[qtail] = mask
            qtail += 1
        while qhead < qtail and ncells < n:
            w = queue[qhead]
            qhead += 1
            nout = 0
            pos = 0
            for c in range(ncells):
                start = cstart[c]
                size = cstart[c + 1] - start
                if size == 1:
                    nstart[nout] = pos
                    nout += 1
                    norder[pos] = order[start]
                    pos += 1
                    continue
                lo = 1 << 30
                hi = -1
                for j in range(size):
                    k = __builtin_popcountll(a[order[start + j]] & w)
                    cnt[j] = k
                    if k < lo:
                        lo = k
                    if k > hi:
                        hi = k
                if lo == hi:
                    nstart[nout] = pos
                    nout += 1
                    for j in range(size):
                        norder[pos] = order[start + j]
                        pos += 1
                    continue
                trace.append(nout)
                k = lo
                while k <= hi:
                    mask = 0
                    i = pos
                    for j in range(size):
                        if cnt[j] == k:
                            norder[pos] = order[start + j]
                            mask |= (<uint64_t> 1) << order[start + j]
                            pos += 1
                    if pos > i:
                        nstart[nout] = i
                        nout += 1
                        trace.append(k)
                        trace.append(pos - i)
                        if qtail == qcap:
                            # compact the consumed prefix
                            for j in range(qhead, qtail):
                                queue[j - qhead] = queue[j]
                            qtail -= qhead
                            qhead = 0
                        queue[qtail] = mask
                        qtail += 1
                    k += 1
            ncells = nout
            nstart[ncells] = n
            for j in range(ncells + 1):
                cstart[j] = nstart[j]
            for j in range(n):
                order[j] = norder[j]
        trace.append(ncells)
        out = []
        for c in range(ncells):
            out.append([order[j] for j in range(cstart[c], cstart[c + 1])])
        return out, trace
    finally:
        free(a)
        free(order)
        free(cstart)
        free(nstart)
        free(norder)
        free(cnt)
        free(queue)
