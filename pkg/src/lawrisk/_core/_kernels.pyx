# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: AR(1) recursion, hold/jump state paths, step-spectrum cell weights."""

from libc.math cimport sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()


def ar1_states(double z0, double[::1] eps, double a):
    cdef Py_ssize_t n = eps.shape[0] + 1
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] z = out
    cdef double s = sqrt(1.0 - a * a)
    cdef double prev = z0
    cdef Py_ssize_t t
    z[0] = z0
    for t in range(1, n):
        prev = a * prev + s * eps[t - 1]
        z[t] = prev
    return out


def hold_states(long long init, cnp.uint8_t[::1] jumps, long long[::1] proposals):
    cdef Py_ssize_t n = jumps.shape[0] + 1
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] s = out
    cdef long long prev = init
    cdef Py_ssize_t t
    s[0] = init
    for t in range(1, n):
        if jumps[t - 1]:
            prev = proposals[t - 1]
        s[t] = prev
    return out


def step_cell_weights(double[::1] breaks, double[::1] levels, Py_ssize_t n):
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] w = out
    cdef Py_ssize_t k = levels.shape[0]
    cdef Py_ssize_t i, j = 0
    cdef double cur = 0.0
    cdef double cell_end, acc
    for i in range(n):
        cell_end = (i + 1) / <double>n
        acc = 0.0
        while j + 1 < k and breaks[j + 1] < cell_end:
            acc += levels[j] * (breaks[j + 1] - cur)
            cur = breaks[j + 1]
            j += 1
        acc += levels[j] * (cell_end - cur)
        cur = cell_end
        w[i] = acc
    return out
