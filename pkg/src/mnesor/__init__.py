"""Fuzzy mnesors: fuzzy sets as a semimodule over (R+, max, x)."""

from .errors import (
    DomainError,
    IncompatibleCarrierError,
    InstanceError,
    MnesorError,
    ParseError,
    SetFileError,
    UnboundVariableError,
)
from .fuzzyset import (
    HIGH,
    DiscreteFuzzySet,
    FuzzySet,
    SampledFuzzySet,
    Shape,
    fs_complement,
    fs_empty,
    fs_equals,
    fs_from_shape,
    fs_full,
    fs_intersect,
    fs_is_subset,
    fs_min,
    fs_scale,
    fs_union,
)
from .grade import (
    ComplementConfig,
    Grade,
    ck,
    g_approx_eq,
    g_max,
    g_min,
    g_pow,
    g_scale,
    grade_from_log,
    grade_new,
)
from .kernels import BACKEND

__version__ = "0.1.0"
