import math
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualhyp import _kernels_py, kernels

compiled = pytest.importorskip("dualhyp._kernels")

def _outcome(impl, args):
    # divergent shapes overflow; both backends must fail the same way
    try:
        return impl.series_sum(*args)
    except OverflowError:
        return "overflow"


pair = st.tuples(st.floats(0.1, 4.0), st.floats(-2.0, 2.0))
shift = st.tuples(st.floats(-3.0, 3.0), st.floats(-2.0, 2.0))


@given(st.lists(pair, max_size=3), st.lists(pair, max_size=3), st.lists(shift, max_size=3),
       st.floats(-0.9, 0.9), st.floats(-2.0, 2.0), st.sampled_from([1e-8, 1e-12, 1e-15]))
def test_series_sum_bit_for_bit(num, den, shifts, x_re, x_du, tol):
    args = (num, den, shifts, x_re, x_du, tol, 3000, -1, abs(x_re))
    assert _outcome(compiled, args) == _outcome(_kernels_py, args)


@given(st.lists(pair, max_size=2), st.lists(pair, min_size=1, max_size=2),
       st.floats(-1.0, 1.0), st.floats(-2.0, 2.0), st.integers(1, 40))
def test_fixed_terms_bit_for_bit(num, den, x_re, x_du, n):
    args = (num, den, [], x_re, x_du, 1e-12, 10_000, n, 0.0)
    out = compiled.series_sum(*args)
    assert out == _kernels_py.series_sum(*args)
    assert out[2] == n and out[5] is True


@given(st.lists(pair, min_size=2, max_size=2), st.lists(pair, min_size=1, max_size=1),
       st.sampled_from([1.0, -1.0]))
def test_partial_sums_bit_for_bit_and_resumable(num, den, x):
    checkpoints = [10, 100, 1000]
    whole_c, state_c = compiled.partial_sums(num, den, x, 0.0, checkpoints)
    whole_p, state_p = _kernels_py.partial_sums(num, den, x, 0.0, checkpoints)
    assert whole_c == whole_p
    assert state_c == state_p
    first, state = compiled.partial_sums(num, den, x, 0.0, checkpoints[:1])
    rest, _ = compiled.partial_sums(num, den, x, 0.0, checkpoints[1:], state)
    assert first + rest == whole_c


def test_series_sum_zero_denominator():
    for impl in (compiled, _kernels_py):
        with pytest.raises(ZeroDivisionError):
            impl.series_sum([(1.0, 0.0)], [(-2.0, 0.0)], [], 0.5, 0.0, 1e-12, 100, -1, 0.0)


def test_series_sum_overflow():
    for impl in (compiled, _kernels_py):
        with pytest.raises(OverflowError):
            impl.series_sum([(1.0, 0.0)] * 3, [], [], 1e3, 0.0, 1e-12, 10_000, -1, 1e3)


def test_series_sum_budget_exhausted():
    out = _kernels_py.series_sum([(1.0, 0.0)], [], [], 0.999, 0.0, 1e-12, 50, -1, 0.999)
    assert out[5] is False and math.isinf(out[3])


def test_exp_series():
    s_re, s_du, used, _, _, ok = kernels.series_sum([], [], [], 1.0, 2.0, 1e-12, 1000, -1, 0.0)
    assert ok and math.isclose(s_re, math.e, rel_tol=1e-15)
    assert math.isclose(s_du, 2 * math.e, rel_tol=1e-15)


def _backend(env):
    code = "import dualhyp; print(dualhyp.KERNEL_BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={**os.environ, **env},
                         capture_output=True, text=True, check=True)
    return out.stdout.strip()


def test_backend_selection():
    assert kernels.KERNEL_BACKEND in ("cython", "python")
    assert _backend({"DUALHYP_PURE_PYTHON": "1"}) == "python"
    assert _backend({"DUALHYP_PURE_PYTHON": "0"}) == "cython"
