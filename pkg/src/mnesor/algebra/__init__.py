"""Generic law catalog and randomized checker for mnesor instances."""

from .checker import CheckReport, LawResult, check, leq
from .instance import (
    INSTANCES,
    MnesorInstance,
    discrete_instance,
    get_instance,
    grade_instance,
    sampled_instance,
)
from .laws import Law, demorgan, law_catalog
from .mutants import MUTANTS

__all__ = [
    "CheckReport",
    "INSTANCES",
    "Law",
    "LawResult",
    "MUTANTS",
    "MnesorInstance",
    "check",
    "demorgan",
    "discrete_instance",
    "get_instance",
    "grade_instance",
    "law_catalog",
    "leq",
    "sampled_instance",
]
