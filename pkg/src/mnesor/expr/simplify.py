"""Axiom-driven rewriting of mnesor expressions to a normal form.

Rules fire bottom-up until none applies. Scales are pulled outward and
merged, complements are pushed inward past scales, and the identity,
idempotence and absorption laws remove redundant structure.
"""

from .ast import EMPTY, FULL, Complement, Empty, Full, Intersect, Scale, Union

UNIT_TOL = 1e-12


def _scale(child, factor):
    if abs(factor - 1.0) <= UNIT_TOL:
        return child
    return Scale(child, factor)


def _absorbs(x, other, inner):
    """x + (x o y) or x o (x + y) pattern: ``other`` is an ``inner`` node containing x."""
    return isinstance(other, inner) and (other.left == x or other.right == x)


def _rewrite_complement(e):
    c = e.child
    if isinstance(c, Complement):
        return c.child
    if isinstance(c, Full):
        return EMPTY
    if isinstance(c, Empty):
        return FULL
    if isinstance(c, Scale):
        return _scale(Complement(c.child), 1.0 / c.factor)
    return None


def _rewrite_scale(e):
    c, a = e.child, e.factor
    if abs(a - 1.0) <= UNIT_TOL:
        return c
    if isinstance(c, Scale):
        return _scale(c.child, c.factor * a)
    if isinstance(c, Empty) and a <= 1.0:
        return EMPTY
    if isinstance(c, Full) and a >= 1.0:
        return FULL
    return None


def _rewrite_binary(e):
    union = isinstance(e, Union)
    node, dual = (Union, Intersect) if union else (Intersect, Union)
    unit, absorbing = (Empty, Full) if union else (Full, Empty)
    l, r = e.left, e.right
    if l == r:
        return l
    if isinstance(r, unit):
        return l
    if isinstance(l, unit):
        return r
    if isinstance(l, absorbing) or isinstance(r, absorbing):
        return FULL if union else EMPTY
    if _absorbs(l, r, dual):
        return l
    if _absorbs(r, l, dual):
        return r
    if isinstance(l, Scale) and isinstance(r, Scale):
        if l.child == r.child:
            pick = max if union else min
            return Scale(l.child, pick(l.factor, r.factor))
        if l.factor == r.factor:
            return Scale(node(l.child, r.child), l.factor)
    return None


def _rewrite(e):
    if isinstance(e, Complement):
        return _rewrite_complement(e)
    if isinstance(e, Scale):
        return _rewrite_scale(e)
    if isinstance(e, (Union, Intersect)):
        return _rewrite_binary(e)
    return None


class _Simplifier:
    def __init__(self):
        self.steps = 0

    def normalize(self, e):
        if isinstance(e, (Union, Intersect)):
            e = type(e)(self.normalize(e.left), self.normalize(e.right))
        elif isinstance(e, Complement):
            e = Complement(self.normalize(e.child))
        elif isinstance(e, Scale):
            e = Scale(self.normalize(e.child), e.factor)
        out = _rewrite(e)
        if out is None:
            return e
        self.steps += 1
        # the rewrite may expose new redexes below the root
        return self.normalize(out)


def simplify_with_steps(e):
    """Return ``(normal_form, number_of_rule_applications)``."""
    s = _Simplifier()
    out = s.normalize(e)
    return out, s.steps


def simplify(e):
    return simplify_with_steps(e)[0]
