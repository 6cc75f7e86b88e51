"""Evaluate expressions against an environment of fuzzy sets."""

from dataclasses import dataclass, field

from ..errors import DomainError, IncompatibleCarrierError, UnboundVariableError
from ..fuzzyset import (
    fs_complement,
    fs_empty,
    fs_full,
    fs_intersect,
    fs_scale,
    fs_union,
)
from ..grade import ComplementConfig
from .ast import Complement, Empty, Full, Intersect, Scale, Union, Var


@dataclass
class Env:
    """Named sets sharing one carrier, plus the complement parameter.

    ``carrier`` is only needed to evaluate ``EMPTY``/``FULL`` when no set is
    bound; otherwise it is taken from the bound sets.
    """

    sets: dict = field(default_factory=dict)
    cfg: ComplementConfig = field(default_factory=ComplementConfig)
    carrier: object = None

    def __post_init__(self):
        if not isinstance(self.cfg, ComplementConfig):
            self.cfg = ComplementConfig(self.cfg)
        carriers = {s.carrier for s in self.sets.values()}
        if len(carriers) > 1:
            raise IncompatibleCarrierError(
                "environment sets live on different carriers: "
                + ", ".join(sorted(name for name in self.sets))
            )
        if self.carrier is None and carriers:
            self.carrier = carriers.pop()

    def lookup(self, name):
        try:
            return self.sets[name]
        except KeyError:
            raise UnboundVariableError(name) from None


def evaluate(e, env):
    if isinstance(e, Var):
        return env.lookup(e.name)
    if isinstance(e, (Empty, Full)):
        if env.carrier is None:
            raise DomainError("EMPTY/FULL need a carrier, but the environment has none")
        return fs_empty(env.carrier) if isinstance(e, Empty) else fs_full(env.carrier)
    if isinstance(e, Union):
        return fs_union(evaluate(e.left, env), evaluate(e.right, env))
    if isinstance(e, Intersect):
        return fs_intersect(evaluate(e.left, env), evaluate(e.right, env), env.cfg)
    if isinstance(e, Complement):
        return fs_complement(evaluate(e.child, env), env.cfg)
    if isinstance(e, Scale):
        return fs_scale(evaluate(e.child, env), e.factor)
    raise TypeError(f"not an expression: {e!r}")
