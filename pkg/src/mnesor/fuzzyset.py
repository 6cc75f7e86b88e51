"""Fuzzy sets as mnesors: discrete (labeled universe) and sampled (grid).

Both kinds keep their grades as two parallel float64 arrays, ``values`` and
``logs``. Binary operations never align or resample carriers; a mismatch
raises :class:`IncompatibleCarrierError`.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, IncompatibleCarrierError
from .grade import DEFAULT_K, DEFAULT_TOL, ComplementConfig, Grade, check_scalar


def _k(cfg):
    if cfg is None:
        return DEFAULT_K
    if isinstance(cfg, ComplementConfig):
        return cfg.k
    return ComplementConfig(cfg).k


class FuzzySet:
    """Common machinery; use :class:`DiscreteFuzzySet` or :class:`SampledFuzzySet`."""

    __slots__ = ("values", "logs")

    def __init__(self, values=None, logs=None):
        if logs is not None and values is not None:
            values = np.asarray(values, dtype=np.float64)
            logs = np.asarray(logs, dtype=np.float64)
        elif logs is None:
            values = np.array(values, dtype=np.float64)
            if values.ndim != 1:
                raise DomainError("grades must be a flat sequence")
            bad = np.flatnonzero(~((values >= 0.0) & (values <= 1.0)))
            if bad.size:
                i = int(bad[0])
                raise DomainError(f"grade at index {i} is {values[i]!r}, outside [0, 1]")
            logs = kernels.to_log(values)
        else:
            logs = np.asarray(logs, dtype=np.float64)
            values = kernels.to_linear(logs)
        values.flags.writeable = False
        logs.flags.writeable = False
        self.values = values
        self.logs = logs

    @property
    def carrier(self):
        raise NotImplementedError

    def _like(self, logs, values=None):
        """A new set on the same carrier from log-grades (and, if known, values)."""
        raise NotImplementedError

    def __len__(self):
        return len(self.values)

    def grade_at(self, i):
        return Grade(float(self.values[i]), float(self.logs[i]))

    def __eq__(self, other):
        if not isinstance(other, FuzzySet):
            return NotImplemented
        return fs_equals(self, other, 0.0)

    def __hash__(self):
        return hash((self.carrier, self.values.tobytes()))

    def __or__(self, other):
        return fs_union(self, other)

    def __mul__(self, lam):
        return fs_scale(self, lam)

    def __invert__(self):
        return fs_complement(self)


class DiscreteFuzzySet(FuzzySet):
    __slots__ = ("universe",)

    def __init__(self, universe, grades=None, *, logs=None, values=None):
        """``grades`` is a mapping label -> number or a sequence aligned with ``universe``.

        Labels missing from a mapping get grade 0.
        """
        universe = tuple(str(u) for u in universe)
        if len(set(universe)) != len(universe):
            raise DomainError("universe labels must be unique")
        self.universe = universe
        if logs is not None:
            if len(logs) != len(universe):
                raise DomainError("log-grades do not match the universe size")
            super().__init__(values, logs)
            return
        if grades is None:
            grades = {}
        if hasattr(grades, "keys"):
            unknown = [label for label in grades if label not in universe]
            if unknown:
                raise DomainError(f"label {unknown[0]!r} is not in the universe")
            values = []
            for label in universe:
                g = grades.get(label, 0.0)
                values.append(g.value if isinstance(g, Grade) else g)
        else:
            values = [g.value if isinstance(g, Grade) else g for g in grades]
            if len(values) != len(universe):
                raise DomainError(f"{len(values)} grades for a universe of {len(universe)}")
        super().__init__(values)

    @property
    def carrier(self):
        return ("discrete", self.universe)

    def _like(self, logs, values=None):
        return DiscreteFuzzySet(self.universe, logs=logs, values=values)

    def __getitem__(self, label):
        return self.grade_at(self.universe.index(label))

    def as_dict(self):
        return {u: float(v) for u, v in zip(self.universe, self.values)}

    def __repr__(self):
        body = ", ".join(f"{u}: {v:.6g}" for u, v in zip(self.universe, self.values))
        return f"DiscreteFuzzySet({{{body}}})"


class SampledFuzzySet(FuzzySet):
    __slots__ = ("lo", "hi", "n")

    def __init__(self, lo, hi, samples=None, *, n=None, logs=None, values=None):
        lo, hi = float(lo), float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"need finite lo < hi, got [{lo}, {hi}]")
        if logs is not None:
            super().__init__(values, logs)
        else:
            super().__init__(samples)
        if n is not None and n != len(self.values):
            raise DomainError(f"expected {n} samples, got {len(self.values)}")
        if len(self.values) < 2:
            raise DomainError("a sampled set needs at least 2 samples")
        self.lo, self.hi, self.n = lo, hi, len(self.values)

    @property
    def carrier(self):
        return ("sampled", self.lo, self.hi, self.n)

    def _like(self, logs, values=None):
        return SampledFuzzySet(self.lo, self.hi, logs=logs, values=values)

    @property
    def xs(self):
        return grid(self.lo, self.hi, self.n)

    def __repr__(self):
        return f"SampledFuzzySet([{self.lo}, {self.hi}], n={self.n})"


def grid(lo, hi, n):
    """x_i = lo + i * (hi - lo) / (n - 1), endpoints exact."""
    xs = lo + np.arange(n, dtype=np.float64) * ((hi - lo) / (n - 1))
    xs[-1] = hi
    return xs


def _check_compatible(a, b):
    if type(a) is not type(b) or a.carrier != b.carrier:
        raise IncompatibleCarrierError(f"carrier mismatch: {_describe(a)} vs {_describe(b)}")


def _describe(s):
    if isinstance(s, DiscreteFuzzySet):
        return f"universe {list(s.universe)}"
    if isinstance(s, SampledFuzzySet):
        return f"grid [{s.lo}, {s.hi}] x {s.n}"
    return type(s).__name__


def _pick(a, b, logs):
    """Carry the linear grades of whichever operand supplied each log-grade."""
    return a._like(logs, np.where(logs == a.logs, a.values, b.values))


def fs_union(a, b):
    _check_compatible(a, b)
    return _pick(a, b, kernels.join(a.logs, b.logs))


def fs_scale(a, lam):
    lam = check_scalar(lam)
    if lam == 1.0:
        return a
    return a._like(kernels.scale(a.logs, lam))


def fs_complement(a, cfg=None):
    return a._like(kernels.complement(a.logs, _k(cfg)))


def fs_intersect(a, b, cfg=None):
    """A o B := ~(~A | ~B). Computed literally; pointwise min is the oracle."""
    _check_compatible(a, b)
    k = _k(cfg)
    joined = kernels.join(kernels.complement(a.logs, k), kernels.complement(b.logs, k))
    return a._like(kernels.complement(joined, k))


def fs_min(a, b):
    """Pointwise minimum, the direct form of the meet."""
    _check_compatible(a, b)
    return _pick(a, b, kernels.meet(a.logs, b.logs))


def fs_is_subset(a, b, tol=DEFAULT_TOL):
    """A ⊆ B iff A ∪ B equals B within ``tol``."""
    _check_compatible(a, b)
    return fs_equals(fs_union(a, b), b, tol)


def fs_equals(a, b, tol=DEFAULT_TOL):
    if type(a) is not type(b) or a.carrier != b.carrier:
        return False
    return kernels.max_abs_diff(a.values, b.values) <= tol


def fs_distance(a, b):
    _check_compatible(a, b)
    return kernels.max_abs_diff(a.values, b.values)


def _carrier_args(carrier):
    if isinstance(carrier, FuzzySet):
        return carrier.carrier
    return carrier


def _constant(carrier, value):
    c = _carrier_args(carrier)
    try:
        kind = c[0]
        if kind == "discrete":
            universe = c[1]
            return DiscreteFuzzySet(universe, [value] * len(universe))
        if kind == "sampled":
            _, lo, hi, n = c
            if int(n) != n or n < 2:
                raise DomainError(f"sample count must be an integer >= 2, got {n!r}")
            return SampledFuzzySet(lo, hi, [value] * int(n))
    except (TypeError, IndexError, ValueError) as exc:
        raise DomainError(f"invalid carrier {carrier!r}: {exc}") from None
    raise DomainError(f"invalid carrier {carrier!r}")


def fs_empty(carrier):
    """All-zero set. ``carrier`` is a set or ``("discrete", labels)`` / ``("sampled", lo, hi, n)``."""
    return _constant(carrier, 0.0)


def fs_full(carrier):
    return _constant(carrier, 1.0)


SHAPE_ARITY = {"ramp-up": 2, "ramp-down": 2, "triangle": 3, "trapezoid": 4, "constant": 1}


@dataclass(frozen=True)
class Shape:
    """Piecewise-linear membership function used to build sampled sets."""

    kind: str
    params: tuple

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if self.kind not in SHAPE_ARITY:
            raise DomainError(f"unknown shape kind {self.kind!r}")
        if len(self.params) != SHAPE_ARITY[self.kind]:
            raise DomainError(
                f"{self.kind} takes {SHAPE_ARITY[self.kind]} parameters, got {len(self.params)}"
            )
        if not all(math.isfinite(p) for p in self.params):
            raise DomainError("shape parameters must be finite")
        if self.kind == "constant":
            if not 0.0 <= self.params[0] <= 1.0:
                raise DomainError(f"constant level must lie in [0, 1], got {self.params[0]}")
        elif any(p > q for p, q in zip(self.params, self.params[1:])):
            raise DomainError(f"{self.kind} parameters must be non-decreasing: {self.params}")

    def __call__(self, xs):
        xs = np.asarray(xs, dtype=np.float64)
        p = self.params
        if self.kind == "constant":
            return np.full(xs.shape, p[0])
        if self.kind == "ramp-up":
            return _rise(xs, p[0], p[1])
        if self.kind == "ramp-down":
            return 1.0 - _rise(xs, p[0], p[1])
        if self.kind == "triangle":
            return np.minimum(_rise(xs, p[0], p[1]), 1.0 - _rise(xs, p[1], p[2], strict=True))
        return np.minimum(_rise(xs, p[0], p[1]), 1.0 - _rise(xs, p[2], p[3], strict=True))


def _rise(xs, a, b, strict=False):
    """0 before a, linear to 1 at b, 1 after. A zero-width ramp is a step at b
    (``strict`` makes the step exclusive so a triangle peak stays at 1)."""
    if a == b:
        return (xs > b if strict else xs >= b).astype(np.float64)
    return np.clip((xs - a) / (b - a), 0.0, 1.0)


def fs_from_shape(shape, lo, hi, n):
    if isinstance(n, float) and not n.is_integer():
        raise DomainError(f"sample count must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise DomainError(f"sample count must be >= 2, got {n}")
    lo, hi = float(lo), float(hi)
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    values = np.clip(shape(grid(lo, hi, n)), 0.0, 1.0)
    return SampledFuzzySet(lo, hi, values)


HIGH = Shape("ramp-up", (10.0, 16.0))
"""Years-of-schooling example: no membership up to 10 years, full from 16."""
