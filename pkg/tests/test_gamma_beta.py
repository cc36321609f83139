import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import close
from dualhyp import (
    Dual, beta_dual, beta_dual_quadrature, digamma, gamma_dual, gamma_dual_quadrature,
    gamma_limit_approx, gamma_real, pochhammer_dual,
)
from dualhyp.errors import DomainError, Overflow, PoleError, ZeroFactor

G = 0.57721566490153286061


def test_gamma_dual_examples():
    assert close(gamma_dual(Dual(1, 2)), (1.0, -2 * G), 1e-12)
    assert close(gamma_dual(Dual(3, 1)), (2.0, 2 * (-G + 1.5)), 1e-12)
    assert gamma_dual(Dual(0.5, 0)) == Dual(gamma_real(0.5), 0.0)


@pytest.mark.parametrize("a", [0.3, 1.1, 2.5, 4.75, 9.2, -0.4, -2.6])
@pytest.mark.parametrize("b", [-2.0, 1.0, 3.0])
def test_gamma_dual_against_mpmath(a, b):
    ref = (float(mpmath.gamma(a)), b * float(mpmath.diff(mpmath.gamma, a)))
    assert close(gamma_dual(Dual(a, b)), ref, 1e-11)


def test_gamma_dual_pole_reports_pole_and_argument():
    with pytest.raises(PoleError) as info:
        gamma_dual(Dual(-2.0, 1.0))
    assert info.value.pole == -2


def test_pochhammer_examples():
    assert pochhammer_dual(Dual(-7, 4), 0) == Dual(1, 0)
    assert pochhammer_dual(Dual(2, 1), 3) == Dual(24, 26)
    assert pochhammer_dual(Dual(3, 0), -1) == Dual(0.5, 0)


def test_pochhammer_at_nonpositive_integer_is_finite_product():
    assert pochhammer_dual(Dual(-3, 0), 5) == Dual(0, 0)
    assert pochhammer_dual(Dual(-3, 0), 3) == Dual(-6, 0)
    # the dual part survives the zero factor
    assert pochhammer_dual(Dual(-2, 1), 3) == Dual(0, 2)


def test_pochhammer_negative_zero_factor():
    with pytest.raises(ZeroFactor):
        pochhammer_dual(Dual(1, 0), -2)


@given(st.floats(0.1, 6), st.floats(-2, 2), st.integers(0, 10))
def test_pochhammer_is_gamma_ratio(a, b, k):
    x = Dual(a, b)
    assert close(pochhammer_dual(x, k), gamma_dual(x + k) / gamma_dual(x), 1e-10, 1e-300)


def test_limit_examples():
    assert gamma_limit_approx(Dual(1, 0), 1) == Dual(1, 0)
    assert gamma_limit_approx(Dual(1, 0), 12345) == Dual(1, 0)
    assert math.isclose(gamma_limit_approx(Dual(0.5), 10 ** 5).re, gamma_real(0.5), rel_tol=3e-6)
    approx, exact = gamma_limit_approx(Dual(2, 1), 10 ** 4), gamma_dual(Dual(2, 1))
    assert close(approx, exact, 1e-3)


def test_limit_rejects_bad_input():
    with pytest.raises(ValueError):
        gamma_limit_approx(Dual(1.5), 0)
    with pytest.raises(PoleError):
        gamma_limit_approx(Dual(-1.0), 10)


def test_gamma_quadrature_oracle():
    for a in (0.5, 1.5, 3.0):
        for b in (0.0, 1.0):
            res = gamma_dual_quadrature(Dual(a, b))
            assert close(res.value, gamma_dual(Dual(a, b)), 1e-8, 1e-14)
    with pytest.raises(DomainError):
        gamma_dual_quadrature(Dual(-0.5, 1))


def test_gamma_dual_overflow():
    with pytest.raises(Overflow):
        gamma_dual(Dual(200.0, 1.0))


def test_beta_examples():
    assert close(beta_dual(Dual(1), Dual(1)), (1.0, 0.0), 1e-15)
    assert close(beta_dual(Dual(2), Dual(3)), (1 / 12, 0.0), 1e-14)
    assert close(beta_dual(Dual(2, 1), Dual(1)), (0.5, -0.25), 1e-14)


def test_beta_quadrature_examples():
    assert close(beta_dual_quadrature(Dual(1), Dual(1)).value, (1.0, 0.0), 1e-12, 1e-15)
    assert math.isclose(beta_dual_quadrature(Dual(0.5), Dual(0.5)).value.re, math.pi, rel_tol=1e-9)
    a, c = Dual(2, 1), Dual(3, 0)
    assert close(beta_dual_quadrature(a, c).value, beta_dual(a, c), 1e-8)
    with pytest.raises(DomainError):
        beta_dual_quadrature(Dual(0.0), Dual(1.0))


def test_beta_pole_names_argument():
    with pytest.raises(PoleError) as info:
        beta_dual(Dual(2.0), Dual(-3.0))
    assert info.value.argument == "c"
    with pytest.raises(PoleError) as info:
        beta_dual(Dual(0.5), Dual(-2.5))
    assert info.value.argument == "a+c"


@given(st.floats(0.3, 8), st.sampled_from([-1.0, 0.0, 2.0]),
       st.floats(0.3, 8), st.sampled_from([-1.0, 0.0, 2.0]))
def test_beta_relation_1(a1, a2, c1, c2):
    a, c = Dual(a1, a2), Dual(c1, c2)
    lhs = beta_dual(a, c + 1)
    assert close(c / a * beta_dual(a + 1, c), lhs, 1e-11, 1e-300)
    assert close(c / (a + c) * beta_dual(a, c), lhs, 1e-11, 1e-300)


def test_beta_against_mpmath():
    for a, c in [(0.7, 1.3), (2.5, 4.0), (5.5, 0.6)]:
        da = float(mpmath.diff(lambda t: mpmath.beta(t, c), a))
        dc = float(mpmath.diff(lambda t: mpmath.beta(a, t), c))
        ref = (float(mpmath.beta(a, c)), 1.5 * da - 0.5 * dc)
        assert close(beta_dual(Dual(a, 1.5), Dual(c, -0.5)), ref, 1e-12)


def test_gamma_dual_du_is_gamma_times_digamma():
    for a in range(1, 6):
        assert math.isclose(gamma_dual(Dual(a, 1)).du, gamma_real(a) * digamma(a), rel_tol=1e-15)
