"""The law catalog: every axiom and derived identity of a fuzzy mnesor space.

Each law is a procedure that draws its inputs and returns a list of
obligations. An obligation is ``("eq", label, lhs, rhs)`` (equal within
tolerance) or ``("le", label, a, b)`` (a below b in the additive order).
"""

from dataclasses import dataclass
from typing import Callable

BASE = "base"
COMPLEMENTED = "complemented"
GRADE = "grade"


@dataclass(frozen=True)
class Law:
    id: str
    statement: str
    requires: str
    elements: int
    scalars: int
    procedure: Callable

    @property
    def arity(self):
        return self.elements + self.scalars


def demorgan(m, a, b):
    """A o B := ~(~A + ~B)."""
    return m.complement(m.add(m.complement(a), m.complement(b)))


def _unit(m, d):
    a = d.element("A")
    return [("eq", "A*1 = A", m.scale(a, 1.0), a)]


def _scale_join(m, d):
    a = d.element("A")
    lam, mu = d.scalar("lambda"), d.scalar("mu")
    return [("eq", "A*l + A*m = A*max(l, m)", m.add(m.scale(a, lam), m.scale(a, mu)), m.scale(a, max(lam, mu)))]


def _join_distributes(m, d):
    a, b = d.element("A"), d.element("B")
    lam = d.scalar("lambda")
    return [("eq", "(A + B)*l = A*l + B*l", m.scale(m.add(a, b), lam), m.add(m.scale(a, lam), m.scale(b, lam)))]


def _composition(m, d):
    a = d.element("A")
    lam, mu = d.scalar("lambda"), d.scalar("mu")
    return [("eq", "(A*l)*m = A*(l*m)", m.scale(m.scale(a, lam), mu), m.scale(a, lam * mu))]


def _idempotent(m, d):
    a = d.element("A")
    return [("eq", "A + A = A", m.add(a, a), a)]


def _positivity(m, d):
    a, b = d.element("A"), d.element("B")
    zero = m.zero()
    return [
        ("eq", "A + 0 = A", m.add(a, zero), a),
        ("le", "0 <= A", zero, a),
        ("le", "A <= A + B", a, m.add(a, b)),
    ]


def _selectivity(m, d):
    a = d.element("A")
    lam = d.scalar("lambda")
    if lam <= 1.0:
        return [("le", "l <= 1: A*l <= A", m.scale(a, lam), a)]
    return [("le", "l >= 1: A <= A*l", a, m.scale(a, lam))]


def _empty_scale(m, d):
    lam = d.scalar("lambda", at_most_one=True)
    return [("eq", "0*l = 0 for l in (0, 1]", m.scale(m.zero(), lam), m.zero())]


def _involution(m, d):
    a = d.element("A")
    return [("eq", "~~A = A", m.complement(m.complement(a)), a)]


def _complement_top(m, d):
    return [("eq", "~1 = 0", m.complement(m.top()), m.zero())]


def _complement_scale(m, d):
    a = d.element("A")
    lam = d.scalar("lambda")
    return [("eq", "~(A*l) = (~A)*(1/l)", m.complement(m.scale(a, lam)), m.scale(m.complement(a), 1.0 / lam))]


def _antitone(m, d):
    a, c = d.element("A"), d.element("C")
    b = m.add(a, c)
    ca = m.complement(a)
    e = m.add(ca, m.complement(c))
    return [
        ("le", "A <= B implies ~B <= ~A (B = A + C)", m.complement(b), ca),
        ("le", "~A <= D implies ~D <= A (D = ~A + ~C)", m.complement(e), a),
    ]


def _top_scale(m, d):
    lam = d.scalar("lambda", at_least_one=True)
    return [("eq", "1*l = 1 for l >= 1", m.scale(m.top(), lam), m.top())]


def _meet_definition(m, d):
    a, b = d.element("A"), d.element("B")
    composite = demorgan(m, a, b)
    out = [
        ("le", "A o B <= A", composite, a),
        ("le", "A o B <= B", composite, b),
    ]
    if m.meet is not None:
        out.append(("eq", "meet(A, B) = ~(~A + ~B)", m.meet(a, b), composite))
    return out


def _meet_distributes(m, d):
    a, b = d.element("A"), d.element("B")
    lam = d.scalar("lambda")
    return [("eq", "(A*l) o (B*l) = (A o B)*l", demorgan(m, m.scale(a, lam), m.scale(b, lam)), m.scale(demorgan(m, a, b), lam))]


def _meet_idempotent(m, d):
    a = d.element("A")
    return [("eq", "A o A = A", demorgan(m, a, a), a)]


def _absorption(m, d):
    a, b = d.element("A"), d.element("B")
    return [
        ("eq", "A + (A o B) = A", m.add(a, demorgan(m, a, b)), a),
        ("eq", "A o (A + B) = A", demorgan(m, a, m.add(a, b)), a),
    ]


def _lattice(m, d):
    a, b, c = d.element("A"), d.element("B"), d.element("C")
    return [
        ("eq", "A + B = B + A", m.add(a, b), m.add(b, a)),
        ("eq", "(A + B) + C = A + (B + C)", m.add(m.add(a, b), c), m.add(a, m.add(b, c))),
        ("eq", "A o B = B o A", demorgan(m, a, b), demorgan(m, b, a)),
        ("eq", "(A o B) o C = A o (B o C)", demorgan(m, demorgan(m, a, b), c), demorgan(m, a, demorgan(m, b, c))),
    ]


def _ck_powers(m, d):
    x = d.element("x")
    k = d.k("k")
    n = d.scalar("n")
    return [
        ("eq", "c_k(x)^n = c_(k*n)(x)", m.power(m.ck_family(x, k), n), m.ck_family(x, k * n)),
        ("eq", "c_k(x^n) = c_(k/n)(x)", m.ck_family(m.power(x, n), k), m.ck_family(x, k / n)),
    ]


_CATALOG = (
    Law("L1", "unit: A*1 = A", BASE, 1, 0, _unit),
    Law("L2", "scale-join: A*l + A*m = A*(l (+) m)", BASE, 1, 2, _scale_join),
    Law("L3", "join distributivity: (A + B)*l = A*l + B*l", BASE, 2, 1, _join_distributes),
    Law("L4", "scale composition: (A*l)*m = A*(l x m)", BASE, 1, 2, _composition),
    Law("L5", "idempotent addition: A + A = A", BASE, 1, 0, _idempotent),
    Law("L6", "positivity: 0 is least and A <= A + B", BASE, 2, 0, _positivity),
    Law("L7", "selectivity: l <= 1 gives A*l <= A, l >= 1 gives A <= A*l", BASE, 1, 1, _selectivity),
    Law("L8", "empty scale: 0*l = 0 for l in (0, 1]", BASE, 0, 1, _empty_scale),
    Law("L9", "involution: ~~A = A", COMPLEMENTED, 1, 0, _involution),
    Law("L10", "complement of the full mnesor is empty", COMPLEMENTED, 0, 0, _complement_top),
    Law("L11", "complement-scale: ~(A*l) = (~A)*(1/l)", COMPLEMENTED, 1, 1, _complement_scale),
    Law("L12", "antitone complement: ~A <= ~B iff B <= A", COMPLEMENTED, 2, 0, _antitone),
    Law("L13", "top scale: 1*l = 1 for l >= 1", COMPLEMENTED, 0, 1, _top_scale),
    Law("L14", "meet is the De Morgan composite ~(~A + ~B)", COMPLEMENTED, 2, 0, _meet_definition),
    Law("L15", "scale distributes over meet", COMPLEMENTED, 2, 1, _meet_distributes),
    Law("L16", "meet idempotent: A o A = A", COMPLEMENTED, 1, 0, _meet_idempotent),
    Law("L17", "absorption: A + (A o B) = A and A o (A + B) = A", COMPLEMENTED, 2, 0, _absorption),
    Law("L18", "lattice: join and meet commutative and associative", COMPLEMENTED, 3, 0, _lattice),
    Law("L19", "c_k powers: c_k(x)^n = c_(kn)(x), c_k(x^n) = c_(k/n)(x)", GRADE, 1, 2, _ck_powers),
)


def law_catalog():
    return _CATALOG


def applicable(law, m):
    if law.requires == BASE:
        return True
    if law.requires == COMPLEMENTED:
        return m.complemented
    return m.complemented and m.graded
