# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled state-sum kernel; same contract as the pure-Python version."""

from libc.stdlib cimport malloc, free


cdef inline int _find(int* parent, int u) nogil:
    while parent[u] != u:
        parent[u] = parent[parent[u]]
        u = parent[u]
    return u


def state_histogram(xs, int narcs, long long start, long long stop):
    cdef int nx = len(xs) // 4
    cdef int* cx = <int*> malloc(sizeof(int) * (4 * nx + 1))
    cdef int* parent = <int*> malloc(sizeof(int) * (narcs + 1))
    # counts[(a-b) + nx][loops], flattened
    cdef int width = narcs + 1
    cdef long long* counts = <long long*> malloc(sizeof(long long) * (2 * nx + 1) * width)
    cdef int i, j, u, v, loops, nb, a, b, c, d
    cdef long long state
    if cx == NULL or parent == NULL or counts == NULL:
        free(cx); free(parent); free(counts)
        raise MemoryError()
    try:
        for i in range(4 * nx):
            cx[i] = xs[i]
        for i in range((2 * nx + 1) * width):
            counts[i] = 0
        with nogil:
            state = start
            while state < stop:
                for j in range(narcs):
                    parent[j] = j
                loops = narcs
                nb = 0
                for i in range(nx):
                    a = cx[4 * i]; b = cx[4 * i + 1]; c = cx[4 * i + 2]; d = cx[4 * i + 3]
                    if (state >> i) & 1:
                        nb += 1
                        u = _find(parent, a); v = _find(parent, d)
                        if u != v:
                            parent[u] = v; loops -= 1
                        u = _find(parent, b); v = _find(parent, c)
                        if u != v:
                            parent[u] = v; loops -= 1
                    else:
                        u = _find(parent, a); v = _find(parent, b)
                        if u != v:
                            parent[u] = v; loops -= 1
                        u = _find(parent, c); v = _find(parent, d)
                        if u != v:
                            parent[u] = v; loops -= 1
                counts[(nx - 2 * nb + nx) * width + loops] += 1
                state += 1
        hist = {}
        for i in range(2 * nx + 1):
            for j in range(width):
                if counts[i * width + j]:
                    hist[(i - nx, j)] = counts[i * width + j]
        return hist
    finally:
        free(cx); free(parent); free(counts)
