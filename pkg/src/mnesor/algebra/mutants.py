"""Deliberately broken instances. A sound checker must reject each of them."""

import dataclasses

from ..fuzzyset import DiscreteFuzzySet, fs_min
from ..grade import ComplementConfig, ck, g_pow, grade_new
from .instance import discrete_instance, grade_instance


def _linear_map(f):
    def apply(a):
        return DiscreteFuzzySet(a.universe, [f(float(v)) for v in a.values])

    return apply


def scale_exponent_lambda(k=0.4):
    """Scaling raises grades to lambda instead of 1/lambda."""
    base = discrete_instance(k)
    return dataclasses.replace(
        base,
        name="mutant:scale-exponent-lambda",
        scale=lambda a, lam: DiscreteFuzzySet(a.universe, a.values**lam),
    )


def complement_one_minus(k=0.4):
    """Complement 1 - x on the grade instance, with the c_k laws still on."""
    base = grade_instance(k)
    one_minus = lambda a: grade_new(1.0 - a.value)
    return dataclasses.replace(
        base,
        name="mutant:complement-one-minus",
        complement=one_minus,
        ck_family=lambda a, kk: one_minus(a),
        power=g_pow,
    )


def add_is_min(k=0.4):
    base = discrete_instance(k)
    return dataclasses.replace(base, name="mutant:add-is-min", add=fs_min)


def spliced_complement(k1=0.4, k2=0.5):
    """c_k1 below 1/2 and c_k2 above: decreasing, exchanges 0 and 1, not involutive."""
    c1, c2 = ComplementConfig(k1), ComplementConfig(k2)

    def c(x):
        g = grade_new(x)
        return (ck(c1, g) if x < 0.5 else ck(c2, g)).value

    base = discrete_instance(k1)
    return dataclasses.replace(base, name="mutant:spliced-complement", complement=_linear_map(c))


MUTANTS = {
    "scale-exponent-lambda": scale_exponent_lambda,
    "complement-one-minus": complement_one_minus,
    "add-is-min": add_is_min,
    "spliced-complement": spliced_complement,
}
