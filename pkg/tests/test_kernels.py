import importlib

import numpy as np
import pytest

from mnesor import _kernels_py, kernels
from mnesor.grade import ck_log, g_pow, g_scale, grade_from_log, grade_new

try:
    _compiled = importlib.import_module("mnesor._kernels")
except ImportError:
    _compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(
    pytest.param(_compiled, id="cython", marks=pytest.mark.skipif(_compiled is None, reason="extension not built"))
)


@pytest.fixture
def logs(rng):
    v = rng.random(500)
    v[:5] = [0.0, 1.0, 1e-300, 1 - 1e-15, 0.5]
    with np.errstate(divide="ignore"):
        out = np.log(v)
    return np.concatenate([out, [-1e-320, -1e308, -5e-324]])


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("impl", BACKENDS)
def test_complement_matches_scalar(impl, logs):
    out = impl.complement(logs, 0.4)
    expected = [ck_log(0.4, float(lv)) for lv in logs]
    assert np.array_equal(out, np.array(expected))


@pytest.mark.parametrize("impl", BACKENDS)
def test_to_linear_matches_scalar(impl, logs):
    out = impl.to_linear(logs)
    expected = np.array([grade_from_log(float(lv)).value for lv in logs])
    # endpoints exactly; numpy's vectorized exp may differ from libm by an ulp
    assert np.array_equal(out == 0.0, expected == 0.0)
    assert np.array_equal(out == 1.0, expected == 1.0)
    assert np.all(np.abs(out - expected) <= 2 * np.spacing(expected))
    if impl is _compiled:
        assert np.array_equal(out, expected)


@pytest.mark.parametrize("impl", BACKENDS)
def test_to_log_endpoints(impl):
    out = impl.to_log(np.array([0.0, 1.0, 0.5]))
    assert out[0] == -np.inf and out[1] == 0.0
    assert out[2] == grade_new(0.5).log_value


@pytest.mark.parametrize("impl", BACKENDS)
def test_scale_power_join_meet(impl, logs):
    assert np.array_equal(impl.scale(logs, 0.5), [g_scale(grade_from_log(float(v)), 0.5).log_value for v in logs])
    assert np.array_equal(impl.power(logs, 3.0), [g_pow(grade_from_log(float(v)), 3.0).log_value for v in logs])
    rev = logs[::-1].copy()
    assert np.array_equal(impl.join(logs, rev), np.maximum(logs, rev))
    assert np.array_equal(impl.meet(logs, rev), np.minimum(logs, rev))


@pytest.mark.parametrize("impl", BACKENDS)
def test_max_abs_diff(impl):
    assert impl.max_abs_diff(np.array([0.1, 0.5]), np.array([0.2, 0.45])) == pytest.approx(0.1)
    assert impl.max_abs_diff(np.array([]), np.array([])) == 0.0


@pytest.mark.skipif(_compiled is None, reason="extension not built")
@pytest.mark.parametrize("k", [0.1, 0.4, 0.5, 3.0])
def test_gap_scan_backends_agree(k):
    a = _compiled.ck_gap_sup(k, 10001)
    b = _kernels_py.ck_gap_sup(k, 10001)
    assert a[0] == pytest.approx(b[0], abs=1e-15)
    assert a[1] == b[1]
