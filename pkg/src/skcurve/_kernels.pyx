# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pair-scan kernels over integer lattices.

Inputs are int64 coordinate arrays already scaled to a common integer
lattice and strictly increasing integer times.  Callers guarantee (see
``skcurve.kernels``) that every intermediate product fits in int64.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


def max_pair_ratio(const int64_t[::1] xs, const int64_t[::1] ys, const int64_t[::1] ts):
    """Lexicographically first (i, j) maximizing |p_j - p_i|^2 / (t_j - t_i)."""
    cdef Py_ssize_t n = xs.shape[0], i, j
    cdef int64_t bn = -1, bd = 1, dx, dy, d2, dt, xi, yi, ti
    cdef Py_ssize_t bi = -1, bj = -1
    with nogil:
        for i in range(n - 1):
            xi = xs[i]
            yi = ys[i]
            ti = ts[i]
            for j in range(i + 1, n):
                dx = xs[j] - xi
                dy = ys[j] - yi
                d2 = dx * dx + dy * dy
                dt = ts[j] - ti
                if d2 * bd > bn * dt:
                    bn = d2
                    bd = dt
                    bi = i
                    bj = j
    return bn, bd, bi, bj


def first_excess(const int64_t[::1] xs, const int64_t[::1] ys, const int64_t[::1] ts,
                 int64_t a, int64_t b, int64_t c):
    """Lexicographically first (i, j), i < j, with a*|p_j - p_i|^2 > b*(t_j - t_i) + c."""
    cdef Py_ssize_t n = xs.shape[0], i, j
    cdef int64_t dx, dy, xi, yi, ti
    cdef Py_ssize_t ri = -1, rj = -1
    with nogil:
        for i in range(n - 1):
            xi = xs[i]
            yi = ys[i]
            ti = ts[i]
            for j in range(i + 1, n):
                dx = xs[j] - xi
                dy = ys[j] - yi
                if a * (dx * dx + dy * dy) > b * (ts[j] - ti) + c:
                    ri = i
                    rj = j
                    break
            if ri >= 0:
                break
    return ri, rj
