"""Expression trees over named fuzzy sets and their canonical printer."""

import math
import re
from dataclasses import dataclass

from ..errors import DomainError

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
KEYWORDS = ("EMPTY", "FULL")


class Expr:
    __slots__ = ()

    def __str__(self):
        return unparse(self)


@dataclass(frozen=True)
class Var(Expr):
    name: str

    def __post_init__(self):
        if not NAME_RE.match(self.name) or self.name in KEYWORDS:
            raise DomainError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True)
class Empty(Expr):
    pass


@dataclass(frozen=True)
class Full(Expr):
    pass


@dataclass(frozen=True)
class Union(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Intersect(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Complement(Expr):
    child: Expr


@dataclass(frozen=True)
class Scale(Expr):
    child: Expr
    factor: float

    def __post_init__(self):
        if not (isinstance(self.factor, (int, float)) and self.factor > 0 and math.isfinite(self.factor)):
            raise DomainError(f"scale literal must be finite and > 0, got {self.factor!r}")
        object.__setattr__(self, "factor", float(self.factor))


EMPTY = Empty()
FULL = Full()


def children(e):
    if isinstance(e, (Union, Intersect)):
        return (e.left, e.right)
    if isinstance(e, (Complement, Scale)):
        return (e.child,)
    return ()


def size(e):
    """Node count."""
    return 1 + sum(size(c) for c in children(e))


def depth(e):
    return 1 + max((depth(c) for c in children(e)), default=0)


def variables(e):
    if isinstance(e, Var):
        return {e.name}
    out = set()
    for c in children(e):
        out |= variables(c)
    return out


# binding strength, loosest first
_UNION, _INTERSECT, _PREFIX, _POSTFIX, _ATOM = range(5)


def _level(e):
    if isinstance(e, Union):
        return _UNION
    if isinstance(e, Intersect):
        return _INTERSECT
    if isinstance(e, Complement):
        return _PREFIX
    if isinstance(e, Scale):
        return _POSTFIX
    return _ATOM


def format_number(x):
    text = repr(float(x))
    return text[:-2] if text.endswith(".0") else text


def unparse(e):
    """Canonical text with the fewest parentheses that parse back to ``e``."""
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Empty):
        return "EMPTY"
    if isinstance(e, Full):
        return "FULL"
    if isinstance(e, (Union, Intersect)):
        level = _level(e)
        op = " | " if level == _UNION else " & "
        left = _wrap(e.left, _level(e.left) < level)
        right = _wrap(e.right, _level(e.right) <= level)
        return left + op + right
    if isinstance(e, Complement):
        # ~X * 2 parses as ~(X * 2), so a scaled child needs no parentheses
        return "~" + _wrap(e.child, _level(e.child) < _PREFIX)
    if isinstance(e, Scale):
        return _wrap(e.child, _level(e.child) < _POSTFIX) + " * " + format_number(e.factor)
    raise TypeError(f"not an expression: {e!r}")


def _wrap(e, paren):
    text = unparse(e)
    return f"({text})" if paren else text
