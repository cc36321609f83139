"""Confluent hypergeometric function 1F1 in dual arithmetic."""

from __future__ import annotations

import math

from ..dual import ONE, Dual, as_dual, exp, pow_dual, pow_real_base
from ..errors import DegenerateParameters, DomainError
from ..gamma import gamma_dual, pochhammer_dual
from ..hypergeometric import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    HypergeometricParams,
    SeriesResult,
    pfq,
    product_derivative,
)
from ..reference import QuadratureResult, quad_de

__all__ = [
    "confluent",
    "confluent_diff_formula",
    "confluent_contiguous_residual",
    "confluent_integral_rep",
    "INTEGRAL_FORMULAS",
    "confluent_integral_formula",
    "confluent_integrand",
]


def _params(a, b):
    return HypergeometricParams([a], [b])


def confluent(a, b, x, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """1F1(a; b; x); converges for every finite x."""
    return pfq(_params(a, b), x, tol, max_terms)


def _F(a, b, x):
    return confluent(a, b, x).value


def _sign(r):
    return -1.0 if r % 2 else 1.0


def confluent_diff_formula(formula: int, r: int, a, b, x):
    """Both sides of one of the six r-th derivative formulas of 1F1.

    The left side is differentiated term by term; the right side is the
    closed form.  Returns ``(lhs, rhs)``.
    """
    a, b, x = as_dual(a), as_dual(b), as_dual(x)
    r = int(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    P = _params(a, b)
    if formula == 1:
        lhs = product_derivative(P, x, r)
        rhs = pochhammer_dual(a, r) / pochhammer_dual(b, r) * _F(a + r, b + r, x)
    elif formula == 2:
        lhs = product_derivative(P, x, r, power=a + (r - 1))
        rhs = pochhammer_dual(a, r) * pow_dual(x, a - 1.0) * _F(a + r, b, x)
    elif formula == 3:
        lhs = product_derivative(P, x, r, power=b - 1.0)
        rhs = (_sign(r) * pochhammer_dual(1.0 - b, r) * pow_dual(x, b - 1.0 - r)
               * _F(a, b - r, x))
    elif formula == 4:
        lhs = product_derivative(P, x, r, exp_sign=-1.0)
        rhs = (_sign(r) * pochhammer_dual(b - a, r) / pochhammer_dual(b, r)
               * _F(b - a + r, b + r, -x))
    elif formula == 5:
        lhs = product_derivative(P, x, r, power=b - a + (r - 1), exp_sign=-1.0)
        rhs = pochhammer_dual(b - a, r) * pow_dual(x, b - a - 1.0) * _F(b - a + r, b, -x)
    elif formula == 6:
        lhs = product_derivative(P, x, r, power=b - 1.0, exp_sign=-1.0)
        rhs = (_sign(r) * pochhammer_dual(1.0 - b, r) * pow_dual(x, b - r - 1.0)
               * _F(b - a, b - r, -x))
    else:
        raise ValueError(f"no confluent differential formula {formula!r}; use 1..6")
    return lhs, rhs


def confluent_contiguous_residual(relation: int, a, b, x) -> Dual:
    """LHS - RHS of one of the three 1F1 contiguous relations."""
    a, b, x = as_dual(a), as_dual(b), as_dual(x)
    F = _F(a, b, x)
    if relation == 1:
        return (a - b + 1.0) * F - (a * _F(a + 1.0, b, x) - (b - 1.0) * _F(a, b - 1.0, x))
    if relation == 2:
        return b * (a + x) * F - (a * b * _F(a + 1.0, b, x) - (a - b) * x * _F(a, b + 1.0, x))
    if relation == 3:
        return b * F - (b * _F(a - 1.0, b, x) + x * _F(a, b + 1.0, x))
    raise ValueError(f"no confluent contiguous relation {relation!r}; use 1..3")


def _prefactor(a, b):
    return gamma_dual(b) / (gamma_dual(a) * gamma_dual(b - a))


def confluent_integral_rep(form: int, a, b, x, tol: float = 1e-10) -> QuadratureResult:
    """1F1(a; b; x) through one of five beta-type integrals.

    1: over [0, 1] with e^(u x);  2: over the segment from 0 to x;  3: over
    [0, 1] with e^x e^(-v x);  4 and 5: over [-1, 1].  Form 2 needs x.re > 0
    and integrates over v in [0, x.re] with v scaled by x / x.re, so the dual
    part of x is carried along the path.
    """
    a, b, x = as_dual(a), as_dual(b), as_dual(x)
    if not (a.re > 0.0 and (b - a).re > 0.0):
        raise DomainError("integral representation needs Re(a) > 0 and Re(b - a) > 0")
    pre = _prefactor(a, b)
    am1 = a - 1.0
    bam1 = b - a - 1.0
    if form == 1:
        def f(t, left, right):
            return exp(am1 * math.log(left) + bam1 * math.log(right) + t * x)

        res = quad_de(f, 0.0, 1.0, tol, endpoints=True, relative=True)
    elif form == 2:
        if not x.re > 0.0:
            raise DomainError("form 2 integrates from 0 to x and needs x.re > 0")
        c = x / x.re
        log_c = Dual(0.0, c.du)  # log(1 + eps*du) with c.re == 1

        def f(t, left, right):
            return exp(am1 * (math.log(left) + log_c) + bam1 * (math.log(right) + log_c)
                       + t * c) * c

        res = quad_de(f, 0.0, x.re, tol, endpoints=True, relative=True)
        pre = pre * pow_dual(x, 1.0 - b)
    elif form == 3:
        # e^x * int v^(b-a-1) (1-v)^(a-1) e^(-v x) dv
        def f(t, left, right):
            return exp(bam1 * math.log(left) + am1 * math.log(right) - t * x)

        res = quad_de(f, 0.0, 1.0, tol, endpoints=True, relative=True)
        pre = pre * exp(x)
    elif form in (4, 5):
        # left = 1 + v, right = 1 - v
        bm2 = b - 2.0
        sign = -0.5 if form == 4 else 0.5

        if form == 4:
            def f(t, left, right):
                return exp(am1 * (math.log(right) - math.log(left)) + bm2 * math.log(left)
                           + (sign * t) * x)
        else:
            def f(t, left, right):
                return exp(am1 * (math.log(left) - math.log(right)) + bm2 * math.log(right)
                           + (sign * t) * x)

        res = quad_de(f, -1.0, 1.0, tol, endpoints=True, relative=True)
        pre = pre * pow_real_base(2.0, 1.0 - b) * exp(0.5 * x)
    else:
        raise ValueError(f"no confluent integral form {form!r}; use 1..5")
    return QuadratureResult(pre * res.value, res.abs_error_estimate * abs(pre), res.nodes)


# Integral formulas: name -> (integrand, antiderivative)
INTEGRAL_FORMULAS = ("plain", "power_b", "power_a", "exp_weight")


def _formula_name(formula):
    if isinstance(formula, int) and 1 <= formula <= 4:
        return INTEGRAL_FORMULAS[formula - 1]
    if formula in INTEGRAL_FORMULAS:
        return formula
    raise ValueError(f"unknown integral formula {formula!r}; use one of {INTEGRAL_FORMULAS}")


def confluent_integrand(formula, a, b, x) -> Dual:
    """The integrand whose antiderivative the named formula gives."""
    name = _formula_name(formula)
    a, b, x = as_dual(a), as_dual(b), as_dual(x)
    F = _F(a, b, x)
    if name == "plain":
        return F
    if name == "power_b":
        return pow_dual(x, b - 1.0) * F
    if name == "power_a":
        return pow_dual(x, a - 2.0) * F
    return exp(-x) * F


def confluent_integral_formula(formula, a, b, x):
    """Closed-form antiderivative (constant 0) and its term-wise derivative.

    Returns ``(antiderivative, derivative)``; the derivative is obtained by
    differentiating the closed form term by term and should reproduce
    :func:`confluent_integrand`.
    """
    name = _formula_name(formula)
    a, b, x = as_dual(a), as_dual(b), as_dual(x)
    if name == "plain":
        if (a - 1.0).re == 0.0:
            raise DegenerateParameters("this antiderivative needs a != 1")
        c = (b - 1.0) / (a - 1.0)
        P = _params(a - 1.0, b - 1.0)
        return c * pfq(P, x).value, c * product_derivative(P, x, 1)
    if name == "power_b":
        P = _params(a, b + 1.0)
        c = ONE / b
        return c * pow_dual(x, b) * pfq(P, x).value, c * product_derivative(P, x, 1, power=b)
    if name == "power_a":
        if (a - 1.0).re == 0.0:
            raise DegenerateParameters("this antiderivative needs a != 1")
        P = _params(a - 1.0, b)
        c = ONE / (a - 1.0)
        return (c * pow_dual(x, a - 1.0) * pfq(P, x).value,
                c * product_derivative(P, x, 1, power=a - 1.0))
    if (1.0 + a - b).re == 0.0:
        raise DegenerateParameters("this antiderivative needs 1 + a - b != 0")
    P = _params(a, b - 1.0)
    c = (b - 1.0) / (1.0 + a - b)
    return (c * exp(-x) * pfq(P, x).value,
            c * product_derivative(P, x, 1, exp_sign=-1.0))
