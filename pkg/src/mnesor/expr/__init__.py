"""Expression language over named fuzzy sets."""

from .ast import (
    EMPTY,
    FULL,
    Complement,
    Empty,
    Expr,
    Full,
    Intersect,
    Scale,
    Union,
    Var,
    depth,
    size,
    unparse,
    variables,
)
from .evaluate import Env, evaluate
from .parser import parse, tokenize
from .simplify import simplify, simplify_with_steps

__all__ = [
    "EMPTY",
    "FULL",
    "Complement",
    "Empty",
    "Env",
    "Expr",
    "Full",
    "Intersect",
    "Scale",
    "Union",
    "Var",
    "depth",
    "evaluate",
    "parse",
    "simplify",
    "simplify_with_steps",
    "size",
    "tokenize",
    "unparse",
    "variables",
]
