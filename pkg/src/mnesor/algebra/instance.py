"""The capability bundle the law checker works against, plus the built-in instances."""

from dataclasses import dataclass
from typing import Any, Callable, Optional

import numpy as np

from ..errors import InstanceError
from ..fuzzyset import (
    DiscreteFuzzySet,
    SampledFuzzySet,
    Shape,
    fs_complement,
    fs_distance,
    fs_empty,
    fs_equals,
    fs_from_shape,
    fs_full,
    fs_min,
    fs_scale,
    fs_union,
)
from ..grade import (
    DEFAULT_K,
    ComplementConfig,
    ck,
    g_approx_eq,
    g_max,
    g_min,
    g_pow,
    g_scale,
    grade_new,
)


@dataclass(frozen=True)
class MnesorInstance:
    """A candidate semimodule over (R+, max, x), given by its operations.

    ``sample(seed)`` must be deterministic. ``complement`` requires ``top``.
    ``meet`` is an optional direct form of the intersection, checked against
    the De Morgan composite. ``power`` and ``ck_family(a, k)`` enable the
    grade-level c_k identities.
    """

    name: str
    zero: Callable[[], Any]
    add: Callable[[Any, Any], Any]
    scale: Callable[[Any, float], Any]
    equal: Callable[[Any, Any, float], bool]
    sample: Callable[[int], Any]
    top: Optional[Callable[[], Any]] = None
    complement: Optional[Callable[[Any], Any]] = None
    meet: Optional[Callable[[Any, Any], Any]] = None
    distance: Optional[Callable[[Any, Any], float]] = None
    serialize: Optional[Callable[[Any], Any]] = None
    power: Optional[Callable[[Any, float], Any]] = None
    ck_family: Optional[Callable[[Any, float], Any]] = None
    scalar_bounds: tuple = (0.05, 4.0)
    k_bounds: tuple = (0.1, 5.0)

    def __post_init__(self):
        if self.complement is not None and self.top is None:
            raise InstanceError(f"instance {self.name!r} has a complement but no top element")
        lo, hi = self.scalar_bounds
        if not 0 < lo <= 1 <= hi:
            raise InstanceError(f"scalar bounds must bracket 1 inside (0, inf), got {self.scalar_bounds}")

    @property
    def complemented(self):
        return self.complement is not None

    @property
    def graded(self):
        return self.power is not None and self.ck_family is not None


def _grade_u(rng):
    """A grade in [0, 1] that hits the endpoints and their neighborhoods often."""
    r = rng.random()
    if r < 0.1:
        return 0.0
    if r < 0.2:
        return 1.0
    if r < 0.25:
        return float(10.0 ** rng.uniform(-300, -1))
    if r < 0.3:
        return 1.0 - float(10.0 ** rng.uniform(-15, -1))
    return float(rng.random())


UNIVERSE = tuple(f"u{i}" for i in range(6))


def discrete_instance(k=DEFAULT_K, universe=UNIVERSE):
    cfg = ComplementConfig(k)
    carrier = ("discrete", tuple(universe))

    def sample(seed):
        rng = np.random.default_rng(seed)
        return DiscreteFuzzySet(universe, [_grade_u(rng) for _ in universe])

    return MnesorInstance(
        name="discrete",
        zero=lambda: fs_empty(carrier),
        add=fs_union,
        scale=fs_scale,
        equal=fs_equals,
        sample=sample,
        top=lambda: fs_full(carrier),
        complement=lambda a: fs_complement(a, cfg),
        meet=fs_min,
        distance=fs_distance,
        serialize=lambda a: a.as_dict(),
    )


_SHAPES = ("ramp-up", "ramp-down", "triangle", "trapezoid", "constant")


def sampled_instance(k=DEFAULT_K, lo=0.0, hi=1.0, n=33):
    cfg = ComplementConfig(k)
    carrier = ("sampled", lo, hi, n)

    def sample(seed):
        rng = np.random.default_rng(seed)
        if rng.random() < 0.5:
            return SampledFuzzySet(lo, hi, [_grade_u(rng) for _ in range(n)])
        kind = _SHAPES[int(rng.integers(len(_SHAPES)))]
        if kind == "constant":
            params = [_grade_u(rng)]
        else:
            arity = {"ramp-up": 2, "ramp-down": 2, "triangle": 3, "trapezoid": 4}[kind]
            params = sorted(rng.uniform(lo - 0.2, hi + 0.2, size=arity))
        return fs_from_shape(Shape(kind, params), lo, hi, n)

    return MnesorInstance(
        name="sampled",
        zero=lambda: fs_empty(carrier),
        add=fs_union,
        scale=fs_scale,
        equal=fs_equals,
        sample=sample,
        top=lambda: fs_full(carrier),
        complement=lambda a: fs_complement(a, cfg),
        meet=fs_min,
        distance=fs_distance,
        serialize=lambda a: [float(v) for v in a.values],
    )


def grade_instance(k=DEFAULT_K):
    cfg = ComplementConfig(k)
    zero, one = grade_new(0.0), grade_new(1.0)
    return MnesorInstance(
        name="grade",
        zero=lambda: zero,
        add=g_max,
        scale=g_scale,
        equal=g_approx_eq,
        sample=lambda seed: grade_new(_grade_u(np.random.default_rng(seed))),
        top=lambda: one,
        complement=lambda a: ck(cfg, a),
        meet=g_min,
        distance=lambda a, b: abs(a.value - b.value),
        serialize=lambda a: a.value,
        power=g_pow,
        ck_family=lambda a, kk: ck(kk, a),
    )


INSTANCES = {
    "discrete": discrete_instance,
    "sampled": sampled_instance,
    "grade": grade_instance,
}


def get_instance(name, k=DEFAULT_K):
    try:
        factory = INSTANCES[name]
    except KeyError:
        raise InstanceError(f"unknown instance {name!r}; choose from {', '.join(INSTANCES)}") from None
    return factory(k)
