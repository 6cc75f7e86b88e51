"""Kernel backend selection.

The compiled extension is preferred; set ``MNESOR_PURE_PYTHON=1`` to force
the numpy fallback. ``BACKEND`` names whichever was loaded.
"""

import os

if os.environ.get("MNESOR_PURE_PYTHON"):
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl
        BACKEND = "python"

to_log = _impl.to_log
to_linear = _impl.to_linear
scale = _impl.scale
power = _impl.power
complement = _impl.complement
join = _impl.join
meet = _impl.meet
max_abs_diff = _impl.max_abs_diff
ck_gap_sup = _impl.ck_gap_sup
