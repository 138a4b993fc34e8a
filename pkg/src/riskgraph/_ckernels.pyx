# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``riskgraph._pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()


def max_flow(const cnp.int64_t[::1] offsets, const cnp.int64_t[::1] head,
             const cnp.int64_t[::1] rev, cnp.int64_t[::1] cap,
             Py_ssize_t source, Py_ssize_t sink):
    cdef Py_ssize_t nodes = offsets.shape[0] - 1
    cdef cnp.int64_t[::1] parent_arc = np.empty(nodes, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = np.empty(nodes, dtype=np.int64)
    cdef Py_ssize_t qh, qt, x, y, a, i
    cdef long flow = 0
    cdef bint found
    while True:
        for i in range(nodes):
            parent_arc[i] = -1
        parent_arc[source] = -2
        qh = 0
        qt = 0
        queue[qt] = source
        qt += 1
        found = False
        while qh < qt and not found:
            x = queue[qh]
            qh += 1
            for a in range(offsets[x], offsets[x + 1]):
                if cap[a] > 0:
                    y = head[a]
                    if parent_arc[y] == -1:
                        parent_arc[y] = a
                        if y == sink:
                            found = True
                            break
                        queue[qt] = y
                        qt += 1
        if not found:
            break
        y = sink
        while y != source:
            a = parent_arc[y]
            cap[a] -= 1
            cap[rev[a]] += 1
            y = head[rev[a]]
        flow += 1
    return flow


def farthest_first(r, Py_ssize_t k, Py_ssize_t first):
    cdef const double[::1] vals = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = vals.shape[0]
    cdef double[::1] dist = np.empty(n, dtype=np.float64)
    cdef cnp.int64_t[::1] labels = np.zeros(n, dtype=np.int64)
    cdef cnp.uint8_t[::1] is_center = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t v, w, idx
    cdef double best, d, cw
    cdef double c0 = vals[first]
    centers = [first]
    for v in range(n):
        dist[v] = fabs(vals[v] - c0)
    is_center[first] = 1
    dist[first] = 0.0
    while len(centers) < k:
        w = -1
        best = -1.0
        for v in range(n):
            if not is_center[v] and dist[v] > best:
                best = dist[v]
                w = v
        idx = len(centers)
        centers.append(w)
        is_center[w] = 1
        labels[w] = idx
        dist[w] = 0.0
        cw = vals[w]
        for v in range(n):
            if not is_center[v]:
                d = fabs(vals[v] - cw)
                if d < dist[v]:
                    dist[v] = d
                    labels[v] = idx
    return centers, [int(x) for x in labels]


def greedy_block_count(sorted_r, double diameter):
    cdef const double[::1] vals = np.ascontiguousarray(sorted_r, dtype=np.float64)
    cdef Py_ssize_t n = vals.shape[0], i
    cdef long count
    cdef double start
    if n == 0:
        return 0
    count = 1
    start = vals[0]
    for i in range(n):
        if vals[i] - start > diameter:
            count += 1
            start = vals[i]
    return count
