"""Reading and writing set-definition JSON files.

Layout::

    {"universe": ["a", "b"],                       # optional
     "sets": {"A": {"type": "discrete", "grades": {"a": 0.3}},
              "S": {"type": "sampled", "lo": 0, "hi": 1, "n": 3, "samples": [0, 0.5, 1]},
              "HIGH": {"type": "shape", "kind": "ramp-up", "params": [10, 16],
                       "lo": 0, "hi": 30, "n": 301}}}
"""

import json
import math
from pathlib import Path

from .errors import DomainError, SetFileError
from .fuzzyset import DiscreteFuzzySet, SampledFuzzySet, Shape, fs_from_shape


def _is_number(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _grade(name, where, x):
    if not _is_number(x):
        raise SetFileError(f"set {name!r}: {where} = {x!r} is not a number")
    if not 0.0 <= x <= 1.0:
        raise SetFileError(f"set {name!r}: {where} = {x!r} outside [0, 1]")
    return float(x)


def _field(name, desc, key, check, what):
    if key not in desc:
        raise SetFileError(f"set {name!r}: missing field {key!r}")
    value = desc[key]
    if not check(value):
        raise SetFileError(f"set {name!r}: field {key!r} must be {what}, got {value!r}")
    return value


def _int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _build(name, desc, universe, grid_override):
    if not isinstance(desc, dict):
        raise SetFileError(f"set {name!r}: descriptor must be an object")
    kind = desc.get("type")
    if kind == "discrete":
        grades = _field(name, desc, "grades", lambda g: isinstance(g, dict), "an object")
        checked = {label: _grade(name, f"grades[{label!r}]", v) for label, v in grades.items()}
        labels = universe if universe is not None else list(checked)
        for label in checked:
            if label not in labels:
                raise SetFileError(f"set {name!r}: label {label!r} is not in the universe")
        return DiscreteFuzzySet(labels, checked)
    if kind == "sampled":
        lo = _field(name, desc, "lo", _is_number, "a number")
        hi = _field(name, desc, "hi", _is_number, "a number")
        n = _field(name, desc, "n", _int, "an integer")
        samples = _field(name, desc, "samples", lambda s: isinstance(s, list), "an array")
        if n < 2:
            raise SetFileError(f"set {name!r}: n must be >= 2, got {n}")
        if len(samples) != n:
            raise SetFileError(f"set {name!r}: expected {n} samples, got {len(samples)}")
        values = [_grade(name, f"samples[{i}]", v) for i, v in enumerate(samples)]
        if not lo < hi:
            raise SetFileError(f"set {name!r}: need lo < hi, got [{lo}, {hi}]")
        if grid_override is not None and (float(lo), float(hi), n) != grid_override:
            raise SetFileError(
                f"set {name!r}: sampled on [{lo}, {hi}] x {n}, "
                f"which does not match the requested grid {list(grid_override)}"
            )
        return SampledFuzzySet(lo, hi, values)
    if kind == "shape":
        shape_kind = _field(name, desc, "kind", lambda s: isinstance(s, str), "a string")
        params = _field(name, desc, "params", lambda s: isinstance(s, list), "an array")
        for i, p in enumerate(params):
            if not _is_number(p):
                raise SetFileError(f"set {name!r}: params[{i}] = {p!r} is not a number")
        if grid_override is not None:
            lo, hi, n = grid_override
        else:
            lo = _field(name, desc, "lo", _is_number, "a number")
            hi = _field(name, desc, "hi", _is_number, "a number")
            n = _field(name, desc, "n", _int, "an integer")
        try:
            return fs_from_shape(Shape(shape_kind, params), lo, hi, n)
        except DomainError as exc:
            raise SetFileError(f"set {name!r}: {exc}") from None
    raise SetFileError(f"set {name!r}: unknown type {kind!r}")


def parse_sets(doc, grid=None):
    """Build ``{name: FuzzySet}`` from a decoded set-definition document.

    ``grid=(lo, hi, n)`` re-instantiates shape descriptors on that grid and
    requires sampled descriptors to match it exactly.
    """
    if not isinstance(doc, dict):
        raise SetFileError("top level must be an object")
    universe = doc.get("universe")
    if universe is not None:
        if not isinstance(universe, list) or not all(isinstance(u, str) for u in universe):
            raise SetFileError("'universe' must be an array of strings")
        if len(set(universe)) != len(universe):
            raise SetFileError("'universe' labels must be unique")
    sets = doc.get("sets", {})
    if not isinstance(sets, dict):
        raise SetFileError("'sets' must be an object")
    if grid is not None:
        grid = (float(grid[0]), float(grid[1]), int(grid[2]))
    return {name: _build(name, desc, universe, grid) for name, desc in sets.items()}


def load_sets(path, grid=None):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SetFileError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SetFileError(f"{path}: invalid JSON: {exc}") from None
    return parse_sets(doc, grid)


def descriptor(s):
    if isinstance(s, DiscreteFuzzySet):
        return {"type": "discrete", "grades": s.as_dict()}
    return {
        "type": "sampled",
        "lo": s.lo,
        "hi": s.hi,
        "n": s.n,
        "samples": [float(v) for v in s.values],
    }


def sets_document(sets):
    """Inverse of :func:`parse_sets` for a ``{name: FuzzySet}`` mapping."""
    doc = {}
    universes = {s.universe for s in sets.values() if isinstance(s, DiscreteFuzzySet)}
    if len(universes) == 1:
        doc["universe"] = list(next(iter(universes)))
    doc["sets"] = {name: descriptor(s) for name, s in sets.items()}
    return doc


def dumps_sets(sets):
    return json.dumps(sets_document(sets), indent=2) + "\n"
