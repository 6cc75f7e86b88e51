"""Membership grades on [0, 1] in dual linear / log-domain form.

The external multiplication and the c_k complement are both a single
division in log space (``l -> l / lam`` and ``l -> k / l``), so every grade
carries ``log_value = ln(value)`` next to its linear value and those two
operators are computed on the log side.
"""

import math
import sys
from dataclasses import dataclass

from .errors import DomainError

LOG_ZERO = float("-inf")
LOG_ONE = 0.0

DEFAULT_K = 0.4
DEFAULT_TOL = 1e-9

_TINY = math.ulp(0.0)
_BELOW_ONE = math.nextafter(1.0, 0.0)
_MAX = sys.float_info.max


def _log(v):
    if v == 0.0:
        return LOG_ZERO
    return math.log(v)


def _clamp(lv):
    """Keep a finite log-grade finite and nonzero after a multiplication."""
    if lv == LOG_ZERO:
        return -_MAX
    if lv == 0.0:
        return -_TINY
    return lv


def _exp(lv):
    """exp() that never lets a finite, nonzero log collapse onto 0 or 1."""
    if lv == LOG_ZERO:
        return 0.0
    if lv == 0.0:
        return 1.0
    v = math.exp(lv)
    if v == 0.0:
        return _TINY
    if v == 1.0:
        return _BELOW_ONE
    return v


@dataclass(frozen=True)
class Grade:
    """A membership value. Build with :func:`grade_new` or :func:`grade_from_log`."""

    value: float
    log_value: float

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"Grade({self.value!r})"


ZERO = Grade(0.0, LOG_ZERO)
ONE = Grade(1.0, LOG_ONE)


@dataclass(frozen=True)
class ComplementConfig:
    k: float = DEFAULT_K

    def __post_init__(self):
        if not (isinstance(self.k, (int, float)) and math.isfinite(self.k) and self.k > 0):
            raise DomainError(f"complement parameter k must be a finite positive real, got {self.k!r}")


def check_scalar(lam, what="scale factor"):
    """Validate a scaling factor and return it as float."""
    try:
        lam = float(lam)
    except (TypeError, ValueError):
        raise DomainError(f"{what} must be a real number, got {lam!r}") from None
    if not (lam > 0 and math.isfinite(lam)):
        raise DomainError(f"{what} must be finite and > 0, got {lam!r}")
    return lam


def grade_new(v):
    v = float(v)
    if not 0.0 <= v <= 1.0:
        raise DomainError(f"grade must lie in [0, 1], got {v!r}")
    if v == 0.0:
        return ZERO
    if v == 1.0:
        return ONE
    return Grade(v, math.log(v))


def grade_from_log(lv):
    lv = float(lv)
    if math.isnan(lv) or lv > 0.0:
        raise DomainError(f"log-grade must lie in [-inf, 0], got {lv!r}")
    if lv == 0.0:
        return ONE
    return Grade(_exp(lv), lv)


def g_max(a, b):
    return a if a.log_value >= b.log_value else b


def g_min(a, b):
    return a if a.log_value <= b.log_value else b


def g_scale(a, lam):
    """External multiplication of one grade: ``a ** (1 / lam)``."""
    lam = check_scalar(lam)
    if lam == 1.0 or a.log_value == LOG_ZERO or a.log_value == 0.0:
        return a
    return grade_from_log(_clamp(a.log_value / lam))


def g_pow(a, n):
    n = check_scalar(n, "exponent")
    if n == 1.0 or a.log_value == LOG_ZERO or a.log_value == 0.0:
        return a
    return grade_from_log(_clamp(a.log_value * n))


def ck_log(k, lv):
    """c_k on a log-grade: ``k / lv``, with 0 and 1 exchanged explicitly."""
    if lv == LOG_ZERO:
        return LOG_ONE
    if lv == 0.0:
        return LOG_ZERO
    out = k / lv
    # k / -huge underflows to -0.0 and k / -subnormal overflows to -inf;
    # either would alias an endpoint
    if out == 0.0:
        return -_TINY
    if out == LOG_ZERO:
        return -_MAX
    return out


def ck(cfg, a):
    """The c_k complement ``exp(k / ln a)``; accepts a config or a bare k."""
    k = cfg.k if isinstance(cfg, ComplementConfig) else ComplementConfig(cfg).k
    return grade_from_log(ck_log(k, a.log_value))


def ck_value(k, x):
    """Convenience: c_k on a plain float in [0, 1]."""
    return ck(k, grade_new(x)).value


def g_approx_eq(a, b, tol=DEFAULT_TOL):
    if tol < 0:
        raise DomainError(f"tolerance must be >= 0, got {tol!r}")
    return abs(a.value - b.value) <= tol
