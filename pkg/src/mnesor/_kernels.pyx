# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elementwise kernels; same contracts as ``_kernels_py``."""

import numpy as np
from libc.float cimport DBL_MAX
from libc.math cimport exp, log, fabs, INFINITY, nextafter

cdef double TINY = nextafter(0.0, 1.0)
cdef double BELOW_ONE = nextafter(1.0, 0.0)


cdef inline double _to_linear(double lv) noexcept nogil:
    cdef double v
    if lv == -INFINITY:
        return 0.0
    if lv == 0.0:
        return 1.0
    v = exp(lv)
    if v == 0.0:
        return TINY
    if v == 1.0:
        return BELOW_ONE
    return v


cdef inline double _clamp(double lv, double orig) noexcept nogil:
    if orig == -INFINITY or orig == 0.0:
        return orig
    if lv == -INFINITY:
        return -DBL_MAX
    if lv == 0.0:
        return -TINY
    return lv


cdef inline double _complement(double lv, double k) noexcept nogil:
    cdef double out
    if lv == -INFINITY:
        return 0.0
    if lv == 0.0:
        return -INFINITY
    out = k / lv
    if out == 0.0:
        return -TINY
    if out == -INFINITY:
        return -DBL_MAX
    return out


def to_log(values):
    cdef const double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef Py_ssize_t i, n = v.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = -INFINITY if v[i] == 0.0 else log(v[i])
    return out


def to_linear(logs):
    cdef const double[::1] l = np.ascontiguousarray(logs, dtype=np.float64)
    cdef Py_ssize_t i, n = l.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _to_linear(l[i])
    return out


def scale(logs, double lam):
    cdef const double[::1] l = np.ascontiguousarray(logs, dtype=np.float64)
    cdef Py_ssize_t i, n = l.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = l[i] if lam == 1.0 else _clamp(l[i] / lam, l[i])
    return out


def power(logs, double e):
    cdef const double[::1] l = np.ascontiguousarray(logs, dtype=np.float64)
    cdef Py_ssize_t i, n = l.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = l[i] if e == 1.0 else _clamp(l[i] * e, l[i])
    return out


def complement(logs, double k):
    cdef const double[::1] l = np.ascontiguousarray(logs, dtype=np.float64)
    cdef Py_ssize_t i, n = l.shape[0]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _complement(l[i], k)
    return out


def join(a, b):
    cdef const double[::1] x = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t i, n = x.shape[0]
    if y.shape[0] != n:
        raise ValueError("length mismatch")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = x[i] if x[i] >= y[i] else y[i]
    return out


def meet(a, b):
    cdef const double[::1] x = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t i, n = x.shape[0]
    if y.shape[0] != n:
        raise ValueError("length mismatch")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = x[i] if x[i] <= y[i] else y[i]
    return out


def max_abs_diff(a, b):
    cdef const double[::1] x = np.ascontiguousarray(a, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t i, n = x.shape[0]
    cdef double d, best = 0.0
    if y.shape[0] != n:
        raise ValueError("length mismatch")
    with nogil:
        for i in range(n):
            d = fabs(x[i] - y[i])
            if d > best or d != d:
                best = d
    return best


def ck_gap_sup(double k, Py_ssize_t n):
    cdef Py_ssize_t i, arg = 0
    cdef double x, lv, c, gap, best = -1.0
    if n < 2:
        raise ValueError("need at least two grid points")
    with nogil:
        for i in range(n):
            x = <double>i / <double>(n - 1)
            lv = -INFINITY if x == 0.0 else log(x)
            c = _to_linear(_complement(lv, k))
            gap = fabs(c - (1.0 - x))
            if gap > best:
                best = gap
                arg = i
    return best, <double>arg / <double>(n - 1)
