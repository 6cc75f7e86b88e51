"""Numpy implementation of the elementwise kernels.

Used when the compiled ``_kernels`` extension is unavailable or when
``MNESOR_PURE_PYTHON`` is set. Every function mirrors the scalar code in
:mod:`mnesor.grade` exactly, endpoint branches included.
"""

import sys

import numpy as np

_TINY = np.nextafter(0.0, 1.0)
_BELOW_ONE = np.nextafter(1.0, 0.0)
_MAX = sys.float_info.max


def to_log(values):
    values = np.asarray(values, dtype=np.float64)
    with np.errstate(divide="ignore"):
        return np.log(values)


def to_linear(logs):
    logs = np.asarray(logs, dtype=np.float64)
    out = np.exp(logs)
    out[(out == 0.0) & (logs != -np.inf)] = _TINY
    out[(out == 1.0) & (logs != 0.0)] = _BELOW_ONE
    return out


def _fix_endpoints(out, logs):
    # -inf and 0 are fixed points; everything else must stay strictly inside
    out[out == -np.inf] = -_MAX
    out[out == 0.0] = -_TINY
    out[logs == -np.inf] = -np.inf
    out[logs == 0.0] = 0.0
    return out


def scale(logs, lam):
    logs = np.asarray(logs, dtype=np.float64)
    if lam == 1.0:
        return logs.copy()
    with np.errstate(over="ignore", under="ignore"):
        out = logs / lam
    return _fix_endpoints(out, logs)


def power(logs, n):
    logs = np.asarray(logs, dtype=np.float64)
    if n == 1.0:
        return logs.copy()
    with np.errstate(over="ignore", under="ignore"):
        out = logs * n
    return _fix_endpoints(out, logs)


def complement(logs, k):
    logs = np.asarray(logs, dtype=np.float64)
    with np.errstate(divide="ignore", over="ignore", under="ignore"):
        out = k / logs
    out[out == 0.0] = -_TINY
    out[out == -np.inf] = -_MAX
    out[logs == -np.inf] = 0.0
    out[logs == 0.0] = -np.inf
    return out


def join(a, b):
    return np.maximum(a, b)


def meet(a, b):
    return np.minimum(a, b)


def max_abs_diff(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def ck_gap_sup(k, n):
    """Largest |c_k(x) - (1 - x)| over ``n`` uniform points of [0, 1].

    Returns ``(gap, x)`` where ``x`` is the first grid point reaching it.
    """
    if n < 2:
        raise ValueError("need at least two grid points")
    xs = np.arange(n, dtype=np.float64) / (n - 1)
    cks = to_linear(complement(to_log(xs), k))
    gaps = np.abs(cks - (1.0 - xs))
    i = int(np.argmax(gaps))
    return float(gaps[i]), float(xs[i])
