import math

import mpmath
import pytest

from dualhyp import Dual, confluent, gauss, gauss_sum_at_1
from dualhyp.dual import ARCTAN, exp, lift, log, pow_dual
from dualhyp.errors import DegenerateParameters, DomainError
from dualhyp.special import (
    ELEMENTARY_IDENTITIES,
    INTEGRAL_FORMULAS,
    confluent_contiguous_residual,
    confluent_diff_formula,
    confluent_integral_formula,
    confluent_integral_rep,
    confluent_integrand,
    elementary_identity,
    euler_transform,
    gauss_contiguous_residual,
    gauss_diff_formula,
    gauss_integral_rep,
    gauss_ode_residual,
    pfaff_pfaff,
    pfaff_transform,
)

from conftest import close


def small(d, limit):
    return abs(d.re) < limit and abs(d.du) < limit


def pair_small(pair, limit):
    lhs, rhs = pair
    return small(lhs - rhs, limit)


# confluent


def test_confluent_equal_parameters_is_exp():
    x = Dual(1.0, 2.0)
    assert close(confluent(1.3, 1.3, x).value, (math.e, 2 * math.e), rtol=1e-14)


def test_confluent_closed_form():
    assert math.isclose(confluent(1.0, 2.0, 1.0).value.re, math.e - 1, rel_tol=1e-14)


def test_confluent_erf_shape_at_zero():
    x = Dual(0.0)
    v = confluent(0.5, 1.5, -(x * x)).value * x * (2 / math.sqrt(math.pi))
    assert v == Dual(0.0)


def test_confluent_erf_shape():
    x = Dual(0.8, 1.0)
    v = confluent(0.5, 1.5, -(x * x)).value * x * (2 / math.sqrt(math.pi))
    assert close(v, (math.erf(0.8), 2 / math.sqrt(math.pi) * math.exp(-0.64)), rtol=1e-13)


@pytest.mark.parametrize("a, b, x", [(0.7, 1.9, 3.5), (2.2, 1.1, -4.0), (0.3, 2.8, 12.0)])
def test_confluent_mpmath(a, b, x):
    got = confluent(a, b, Dual(x, 1.0)).value
    assert math.isclose(got.re, float(mpmath.hyp1f1(a, b, x)), rel_tol=1e-11)
    assert math.isclose(got.du, float(mpmath.diff(lambda t: mpmath.hyp1f1(a, b, t), x)),
                        rel_tol=1e-9)


def test_confluent_beyond_unit_disk():
    # p = q converges for every finite argument
    assert confluent(1.0, 2.0, 30.0).converged


def test_diff_formula_1():
    lhs, rhs = confluent_diff_formula(1, 1, 1.0, 2.0, 0.5)
    ref = 0.5 * float(mpmath.hyp1f1(2, 3, 0.5))
    assert math.isclose(lhs.re, ref, rel_tol=1e-13)
    assert math.isclose(rhs.re, ref, rel_tol=1e-13)


def test_diff_formula_4_r0():
    x = Dual(0.6, 1.0)
    lhs, rhs = confluent_diff_formula(4, 0, 0.7, 1.9, x)
    ref = exp(-x) * confluent(0.7, 1.9, x).value
    assert close(lhs, ref, rtol=1e-14)
    assert close(rhs, ref, rtol=1e-14)


def test_diff_formula_1_r2_dual():
    assert pair_small(confluent_diff_formula(1, 2, 0.7, 1.9, Dual(0.3, 1.0)), 1e-9)


@pytest.mark.parametrize("formula", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_diff_formulas(formula, r):
    pair = confluent_diff_formula(formula, r, Dual(0.9, 0.5), Dual(2.3, -1.0), Dual(0.7, 1.0))
    assert pair_small(pair, 1e-9)


def test_diff_formula_unknown():
    with pytest.raises(ValueError):
        confluent_diff_formula(7, 1, 1.0, 2.0, 0.5)


def test_contiguous_at_zero():
    assert confluent_contiguous_residual(3, 0.9, 1.7, 0.0) == Dual(0.0)


def test_contiguous_1():
    assert small(confluent_contiguous_residual(1, 0.9, 1.7, 0.6), 1e-10)


def test_contiguous_2_dual():
    assert small(confluent_contiguous_residual(2, 1.2, 2.4, Dual(0.5, 2.0)), 1e-9)


@pytest.mark.parametrize("relation", [1, 2, 3])
def test_contiguous_dual_parameters(relation):
    r = confluent_contiguous_residual(relation, Dual(1.2, 1.0), Dual(2.4, -0.5), Dual(-1.5, 1.0))
    assert small(r, 1e-9)


def test_integral_form_1():
    assert math.isclose(confluent_integral_rep(1, 1.0, 2.0, 1.0).value.re, math.e - 1,
                        rel_tol=1e-10)


def test_integral_form_3():
    assert math.isclose(confluent_integral_rep(3, 1.0, 2.0, 1.0).value.re, math.e - 1,
                        rel_tol=1e-10)


def test_integral_forms_4_5_agree():
    args = (Dual(0.8, 1.0), Dual(2.1, 0.5), Dual(0.9, -1.0))
    assert close(confluent_integral_rep(4, *args).value, confluent_integral_rep(5, *args).value,
                 rtol=1e-9)


@pytest.mark.parametrize("form", [1, 2, 3, 4, 5])
def test_integral_forms_match_series(form):
    a, b, x = Dual(0.8, 1.0), Dual(2.1, 0.5), Dual(0.9, -1.0)
    got = confluent_integral_rep(form, a, b, x).value
    assert close(got, confluent(a, b, x).value, rtol=1e-7)


def test_integral_form_2_needs_positive_x():
    with pytest.raises(DomainError):
        confluent_integral_rep(2, 0.8, 2.1, -0.5)


@pytest.mark.parametrize("a, b", [(0.0, 2.0), (2.0, 1.5)])
def test_integral_domain(a, b):
    with pytest.raises(DomainError):
        confluent_integral_rep(1, a, b, 0.5)


def test_integral_formula_plain():
    x = Dual(0.6, 1.0)
    anti, deriv = confluent_integral_formula("plain", 2.0, 3.0, x)
    assert close(anti, 2.0 * confluent(1.0, 2.0, x).value, rtol=1e-14)
    assert close(deriv, confluent(2.0, 3.0, x).value, rtol=1e-12)


def test_integral_formula_power_b_near_zero():
    anti, _ = confluent_integral_formula("power_b", 1.0, 1.5, 1e-12)
    assert abs(anti.re) < 1e-17


def test_integral_formula_exp_weight():
    x = Dual(0.4, 1.0)
    _, deriv = confluent_integral_formula("exp_weight", 1.0, 2.5, x)
    assert small(deriv - exp(-x) * confluent(1.0, 2.5, x).value, 1e-8)


@pytest.mark.parametrize("formula", INTEGRAL_FORMULAS)
def test_integral_formula_derivative_matches_integrand(formula):
    a, b, x = Dual(1.7, 0.5), Dual(2.6, 1.0), Dual(0.8, -1.0)
    _, deriv = confluent_integral_formula(formula, a, b, x)
    assert close(deriv, confluent_integrand(formula, a, b, x), rtol=1e-10)


@pytest.mark.parametrize("formula", INTEGRAL_FORMULAS)
def test_integral_formula_fd(formula):
    # slope of the antiderivative against the integrand
    a, b, x = 1.7, 2.6, 0.8
    f = lambda t: confluent_integral_formula(formula, a, b, t)[0].re
    h = 1e-5
    slope = (f(x + h) - f(x - h)) / (2 * h)
    assert math.isclose(slope, confluent_integrand(formula, a, b, x).re, rel_tol=1e-8)


def test_integral_formula_by_index():
    assert (confluent_integral_formula(1, 2.0, 3.0, 0.5)
            == confluent_integral_formula("plain", 2.0, 3.0, 0.5))


@pytest.mark.parametrize("formula, a, b", [("plain", 1.0, 2.0), ("power_a", 1.0, 2.0),
                                           ("exp_weight", 1.5, 2.5)])
def test_integral_formula_degenerate(formula, a, b):
    with pytest.raises(DegenerateParameters):
        confluent_integral_formula(formula, a, b, 0.5)


def test_integral_formula_unknown():
    with pytest.raises(ValueError):
        confluent_integral_formula("nosuch", 2.0, 3.0, 0.5)


# Gauss


def test_gauss_at_zero():
    assert gauss(Dual(0.3, 1.0), 0.4, 2.1, 0.0).value == Dual(1.0)


def test_gauss_log():
    x = Dual(0.2, 0.1)
    v = x * gauss(1.0, 1.0, 2.0, -x).value
    assert close(v, log(1.0 + x), rtol=1e-14)
    assert math.isclose(v.re, math.log(1.2), rel_tol=1e-14)
    assert math.isclose(v.du, 0.1 / 1.2, rel_tol=1e-14)


def test_gauss_arctan():
    x = Dual(0.5)
    v = x * gauss(0.5, 1.0, 1.5, -(x * x)).value
    assert close(v, lift(ARCTAN, x), rtol=1e-14)
    assert math.isclose(v.re, math.atan(0.5), rel_tol=1e-14)


def test_gauss_symmetry_exact():
    x = Dual(0.45, 1.0)
    a, b = Dual(0.3, 1.0), Dual(1.7, -0.5)
    assert gauss(a, b, 2.5, x).value == gauss(b, a, 2.5, x).value


def test_gauss_sum_4_over_pi():
    assert math.isclose(gauss_sum_at_1(0.5, 0.5, 2.0).re, 4 / math.pi, rel_tol=1e-14)


def test_gauss_sum_zero_numerator():
    assert close(gauss_sum_at_1(Dual(0.7, 1.0), 0.0, 2.5), (1.0, 0.0), rtol=1e-14, atol=1e-14)


def test_gauss_sum_dual_against_series():
    closed = gauss_sum_at_1(Dual(0.3, 1.0), 0.4, 2.1)
    series = gauss(Dual(0.3, 1.0), 0.4, 2.1, 1.0).value
    assert close(closed, series, rtol=1e-6)


def test_gauss_sum_mpmath_du():
    closed = gauss_sum_at_1(Dual(0.3, 1.0), 0.4, 2.1)
    du = float(mpmath.diff(lambda t: mpmath.hyp2f1(t, 0.4, 2.1, 1), 0.3))
    assert math.isclose(closed.du, du, rel_tol=1e-12)


def test_gauss_sum_domain():
    with pytest.raises(DomainError):
        gauss_sum_at_1(1.0, 1.0, 2.0)


@pytest.mark.parametrize("a1, a2, b, x", [(0.6, 1.7, 2.3, 0.85), (1.5, -0.5, 0.4, -0.9),
                                          (0.25, 0.25, 0.5, 0.5)])
def test_gauss_mpmath(a1, a2, b, x):
    got = gauss(a1, a2, Dual(b, 1.0), x).value
    assert math.isclose(got.re, float(mpmath.hyp2f1(a1, a2, b, x)), rel_tol=1e-11)
    du = float(mpmath.diff(lambda t: mpmath.hyp2f1(a1, a2, t, x), b))
    assert math.isclose(got.du, du, rel_tol=1e-9)


def test_pfaff_at_zero():
    lhs, rhs = pfaff_transform(0.5, 0.7, 1.9, 0.0)
    assert lhs == Dual(1.0) and rhs == Dual(1.0)


def test_pfaff_real():
    assert pair_small(pfaff_transform(0.5, 0.7, 1.9, 0.3), 1e-10)


def test_pfaff_dual():
    assert pair_small(pfaff_transform(0.5, 0.7, 1.9, Dual(0.3, 2.0)), 1e-9)


def test_pfaff_domain():
    with pytest.raises(DomainError):
        pfaff_transform(0.5, 0.7, 1.9, 0.6)
    with pytest.raises(DomainError):
        pfaff_transform(0.5, 0.7, 1.9, 1.0)


def test_euler_at_zero():
    lhs, rhs = euler_transform(0.5, 0.7, 1.9, 0.0)
    assert lhs == Dual(1.0) and rhs == Dual(1.0)


def test_euler_zero_exponent():
    lhs, rhs = euler_transform(1.0, 1.0, 2.0, 0.5)
    # agrees to the default series tolerance
    assert math.isclose(lhs.re, -math.log(0.5) / 0.5, rel_tol=1e-12)
    assert close(lhs, rhs, rtol=1e-15)


def test_euler_dual():
    assert pair_small(euler_transform(Dual(0.4, 1.0), 0.8, 2.2, 0.35), 1e-9)


def test_pfaff_pfaff_is_euler():
    args = (Dual(0.4, 1.0), Dual(0.8, -0.5), Dual(2.2, 1.0), Dual(-0.3, 1.0))
    assert small(pfaff_pfaff(*args) - euler_transform(*args)[1], 1e-9)


def test_ode_at_zero():
    assert gauss_ode_residual(0.5, 1.5, 2.5, 0.0) == Dual(0.0)


def test_ode_real():
    assert small(gauss_ode_residual(0.5, 1.5, 2.5, 0.3), 1e-9)


def test_ode_dual():
    assert small(gauss_ode_residual(Dual(0.5, 1.0), 1.5, 2.5, Dual(0.3, 1.0)), 1e-8)


def test_contiguous_symmetric():
    a = Dual(0.6, 1.0)
    r = gauss_contiguous_residual(1, a, a, 2.0, 0.4)
    assert small(r, 1e-15)


def test_contiguous_4():
    assert small(gauss_contiguous_residual(4, 0.6, 1.1, 2.0, 0.4), 1e-10)


def test_contiguous_3_dual():
    assert small(gauss_contiguous_residual(3, Dual(0.6, 1.0), 1.1, 2.0, 0.4), 1e-9)


@pytest.mark.parametrize("relation", [1, 2, 3, 4, 5])
def test_gauss_contiguous_all(relation):
    r = gauss_contiguous_residual(relation, Dual(0.6, 1.0), Dual(1.1, -1.0), Dual(2.3, 0.5),
                                  Dual(-0.6, 1.0))
    assert small(r, 1e-9)


def test_contiguous_unknown():
    with pytest.raises(ValueError):
        gauss_contiguous_residual(6, 0.6, 1.1, 2.0, 0.4)


def test_gauss_diff_1():
    lhs, rhs = gauss_diff_formula(1, 1, 1.0, 1.0, 2.0, 0.25)
    ref = 0.5 * float(mpmath.hyp2f1(2, 2, 3, 0.25))
    assert math.isclose(lhs.re, ref, rel_tol=1e-13)
    assert math.isclose(rhs.re, ref, rel_tol=1e-13)


def test_gauss_diff_4_r0():
    lhs, rhs = gauss_diff_formula(4, 0, 0.8, 1.3, 2.1, Dual(0.3, 1.0))
    assert close(lhs, rhs, rtol=1e-14)


def test_gauss_diff_2_dual():
    assert pair_small(gauss_diff_formula(2, 1, 0.8, 1.3, 2.1, Dual(0.3, 1.0)), 1e-9)


@pytest.mark.parametrize("formula", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [0, 1, 2])
def test_gauss_diff_all(formula, r):
    pair = gauss_diff_formula(formula, r, Dual(0.8, 0.5), Dual(1.3, 1.0), Dual(3.1, -1.0),
                              Dual(0.4, 1.0))
    assert pair_small(pair, 1e-9)


def test_gauss_integral_rep():
    a1, a2, b, x = Dual(0.8, 1.0), Dual(1.1, -0.5), Dual(2.3, 0.5), Dual(0.5, 1.0)
    assert close(gauss_integral_rep(a1, a2, b, x).value, gauss(a1, a2, b, x).value, rtol=1e-7)


def test_gauss_integral_rep_domain():
    with pytest.raises(DomainError):
        gauss_integral_rep(2.5, 1.0, 2.0, 0.3)
    with pytest.raises(DomainError):
        gauss_integral_rep(0.8, 1.0, 2.0, 1.0)


# elementary identities


def test_arcsin_at_zero():
    lhs, rhs = elementary_identity("arcsin", 0.0)
    assert lhs == Dual(0.0) and rhs == Dual(0.0)


def test_log_ratio():
    lhs, rhs = elementary_identity("log_ratio", 0.4)
    assert math.isclose(lhs.re, math.log(1.4 / 0.6), rel_tol=1e-14)
    assert close(lhs, rhs, rtol=1e-14)


def test_binomial_cube():
    lhs, rhs = elementary_identity("binomial_n", Dual(0.2, 1.0), n=3)
    assert close(lhs, (1.728, 4.32), rtol=1e-14)
    assert close(rhs, (1.728, 4.32), rtol=1e-14)


@pytest.mark.parametrize("identity", ELEMENTARY_IDENTITIES)
@pytest.mark.parametrize("du", [0.0, 1.0, -2.0])
def test_identities(identity, du):
    lhs, rhs = elementary_identity(identity, Dual(-0.55, du), n=4)
    assert close(lhs, rhs, rtol=1e-12, atol=1e-15)


def test_binomial_matches_pow():
    x = Dual(0.3, -2.0)
    lhs, _ = elementary_identity("binomial_n", x, n=5)
    assert close(lhs, pow_dual(1.0 + x, 5), rtol=1e-14)


@pytest.mark.parametrize("identity, x, n", [("arcsin", 1.0, None), ("binomial_n", 0.2, None),
                                            ("binomial_n", 0.2, -1), ("binomial_n", 0.2, 1.5)])
def test_identity_domain(identity, x, n):
    with pytest.raises(DomainError):
        elementary_identity(identity, x, n=n)


def test_identity_unknown():
    with pytest.raises(ValueError):
        elementary_identity("nosuch", 0.2)
