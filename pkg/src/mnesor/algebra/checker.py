"""Randomized law checking with reproducible counterexamples."""

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from ..errors import DomainError, InstanceError
from ..grade import DEFAULT_TOL
from .laws import applicable, law_catalog

# forced values for the first scalar of the first trials, so that the
# l = 1 boundary and both sides of it are always exercised
_FORCED_SCALARS = (1.0, 1.0 - 2.0**-20, 1.0 + 2.0**-20)


def leq(m, a, b, tol=DEFAULT_TOL):
    """a <= b in the additive order: a + b = b."""
    return m.equal(m.add(a, b), b, tol)


class Draw:
    """Input source for one trial of one law."""

    def __init__(self, m, rng, trial):
        self.m = m
        self.rng = rng
        self.trial = trial
        self.inputs = {}
        self._scalars = 0

    def element(self, name):
        seed = int(self.rng.integers(2**63))
        try:
            a = self.m.sample(seed)
        except Exception as exc:
            raise InstanceError(f"instance {self.m.name!r}: sample({seed}) failed: {exc}") from exc
        self.inputs[name] = _jsonable(self.m, a)
        return a

    def scalar(self, name, at_most_one=False, at_least_one=False):
        lo, hi = self.m.scalar_bounds
        u = float(math.exp(self.rng.uniform(math.log(lo), math.log(hi))))
        if self._scalars == 0 and self.trial < len(_FORCED_SCALARS):
            u = _FORCED_SCALARS[self.trial]
        self._scalars += 1
        if at_most_one:
            u = min(u, 1.0 / u)
        elif at_least_one:
            u = max(u, 1.0 / u)
        self.inputs[name] = u
        return u

    def k(self, name):
        lo, hi = self.m.k_bounds
        v = float(self.rng.uniform(lo, hi))
        self.inputs[name] = v
        return v


def _jsonable(m, a):
    if m.serialize is not None:
        return m.serialize(a)
    return repr(a)


@dataclass
class LawResult:
    id: str
    run: int = 0
    failures: int = 0
    counterexample: Optional[dict] = None
    status: str = "checked"


@dataclass
class CheckReport:
    seed: int
    cases: int
    tol: float
    verdict: str = "pass"
    laws: list = field(default_factory=list)

    @property
    def passed(self):
        return self.verdict == "pass"

    def law(self, law_id):
        for r in self.laws:
            if r.id == law_id:
                return r
        raise KeyError(law_id)

    def failed_laws(self):
        return [r.id for r in self.laws if r.failures]

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary(self):
        lines = []
        for r in self.laws:
            if r.status == "skipped":
                lines.append(f"{r.id:>4}  skipped")
            else:
                lines.append(f"{r.id:>4}  {r.run - r.failures}/{r.run} ok")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _evaluate(m, obligation, tol):
    """Return (holds, lhs, rhs, deviation) for one obligation."""
    kind, _, x, y = obligation
    if kind == "le":
        x = m.add(x, y)
    ok = bool(m.equal(x, y, tol))
    dev = m.distance(x, y) if m.distance is not None else None
    return ok, x, y, dev


def _run_trial(m, law, seed, law_index, trial, tol):
    rng = np.random.default_rng([seed, law_index, trial])
    draw = Draw(m, rng, trial)
    try:
        obligations = law.procedure(m, draw)
    except InstanceError:
        raise
    except (DomainError, ArithmeticError, ValueError) as exc:
        return {"inputs": draw.inputs, "error": f"{type(exc).__name__}: {exc}"}
    for ob in obligations:
        ok, lhs, rhs, dev = _evaluate(m, ob, tol)
        if not ok:
            cx = {
                "inputs": draw.inputs,
                "obligation": ob[1],
                "lhs": _jsonable(m, lhs),
                "rhs": _jsonable(m, rhs),
                "max_deviation": dev,
            }
            if ob[0] == "le":
                cx["note"] = "lhs is the join of both sides; it should equal rhs"
            return cx
    return None


def check(m, cases=1000, seed=42, tol=DEFAULT_TOL, laws=None):
    """Run every applicable law ``cases`` times and collect a report.

    Trial ``t`` of law number ``i`` draws from a generator seeded with
    ``(seed, i, t)``, so results do not depend on execution order.
    """
    if not isinstance(cases, int) or cases < 1:
        raise DomainError(f"cases must be a positive integer, got {cases!r}")
    if tol < 0:
        raise DomainError(f"tolerance must be >= 0, got {tol!r}")
    report = CheckReport(seed=seed, cases=cases, tol=tol)
    for index, law in enumerate(law_catalog()):
        if laws is not None and law.id not in laws:
            continue
        result = LawResult(id=law.id)
        if not applicable(law, m):
            result.status = "skipped"
            report.laws.append(result)
            continue
        for trial in range(cases):
            cx = _run_trial(m, law, seed, index, trial, tol)
            result.run += 1
            if cx is not None:
                result.failures += 1
                if result.counterexample is None:
                    result.counterexample = cx
        report.laws.append(result)
    if any(r.failures for r in report.laws):
        report.verdict = "fail"
    return report
