"""Gauss hypergeometric function 2F1 in dual arithmetic."""

from __future__ import annotations

import math

from ..dual import ARCSIN, ARCTAN, ONE, Dual, as_dual, exp, lift, log, pow_dual
from ..errors import DomainError
from ..gamma import gamma_dual, pochhammer_dual
from ..hypergeometric import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOL,
    HypergeometricParams,
    SeriesResult,
    pfq,
    pfq_derivative,
    product_derivative,
)
from ..reference import QuadratureResult, quad_de

__all__ = [
    "gauss",
    "gauss_sum_at_1",
    "pfaff_transform",
    "euler_transform",
    "pfaff_pfaff",
    "gauss_ode_residual",
    "gauss_contiguous_residual",
    "gauss_diff_formula",
    "gauss_integral_rep",
    "ELEMENTARY_IDENTITIES",
    "elementary_identity",
]


def _params(a1, a2, b):
    return HypergeometricParams([a1, a2], [b])


def gauss(a1, a2, b, x, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """2F1(a1, a2; b; x) for |x| < 1, or |x| = 1 when Re(b - a1 - a2) > 0."""
    return pfq(_params(a1, a2, b), x, tol, max_terms)


def _F(a1, a2, b, x):
    return gauss(a1, a2, b, x).value


def gauss_sum_at_1(a1, a2, b) -> Dual:
    """2F1(a1, a2; b; 1) = G(b) G(b-a1-a2) / (G(b-a1) G(b-a2))."""
    a1, a2, b = as_dual(a1), as_dual(a2), as_dual(b)
    if not (b - a1 - a2).re > 0.0:
        raise DomainError("the summation formula needs Re(b - a1 - a2) > 0")
    num = gamma_dual(b, "b") * gamma_dual(b - a1 - a2, "b-a1-a2")
    return num / (gamma_dual(b - a1, "b-a1") * gamma_dual(b - a2, "b-a2"))


def _check_disk(x):
    if not abs(x.re) < 1.0:
        raise DomainError(f"needs |x| < 1, got {x}")
    if not (1.0 - x).re > 0.0:
        raise DomainError("needs Re(1 - x) > 0")


def pfaff_transform(a1, a2, b, x):
    """``(F(a1, a2; b; x), (1-x)^-a1 F(a1, b-a2; b; -x/(1-x)))``."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    _check_disk(x)
    y = -x / (1.0 - x)
    if not abs(y.re) < 1.0:
        raise DomainError(f"needs |x/(1-x)| < 1, got {y}")
    lhs = _F(a1, a2, b, x)
    rhs = pow_dual(1.0 - x, -a1) * _F(a1, b - a2, b, y)
    return lhs, rhs


def euler_transform(a1, a2, b, x):
    """``(F(a1, a2; b; x), (1-x)^(b-a1-a2) F(b-a1, b-a2; b; x))``."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    _check_disk(x)
    lhs = _F(a1, a2, b, x)
    rhs = pow_dual(1.0 - x, b - a1 - a2) * _F(b - a1, b - a2, b, x)
    return lhs, rhs


def pfaff_pfaff(a1, a2, b, x) -> Dual:
    """Right side of the Pfaff transform applied twice.

    The first application maps x to y = -x/(1-x); the second acts on the
    numerator b - a2 (moved to the front by symmetry) and maps y back.  The
    result should equal the right side of :func:`euler_transform`.
    """
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    _check_disk(x)
    y = -x / (1.0 - x)
    if not abs(y.re) < 1.0:
        raise DomainError(f"needs |x/(1-x)| < 1, got {y}")
    z = -y / (1.0 - y)
    inner = pow_dual(1.0 - y, -(b - a2)) * _F(b - a2, b - a1, b, z)
    return pow_dual(1.0 - x, -a1) * inner


def gauss_ode_residual(a1, a2, b, x) -> Dual:
    """x(1-x) z'' + [b - (1 + a1 + a2) x] z' - a1 a2 z."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    P = _params(a1, a2, b)
    z0 = pfq_derivative(P, x, 0)
    z1 = pfq_derivative(P, x, 1)
    z2 = pfq_derivative(P, x, 2)
    return x * (1.0 - x) * z2 + (b - (1.0 + a1 + a2) * x) * z1 - a1 * a2 * z0


def gauss_contiguous_residual(relation: int, a1, a2, b, x) -> Dual:
    """LHS - RHS of one of the five 2F1 contiguous relations."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    F = _F(a1, a2, b, x)
    if relation == 1:
        return (a1 - a2) * F - (a1 * _F(a1 + 1.0, a2, b, x) - a2 * _F(a1, a2 + 1.0, b, x))
    if relation == 2:
        return (a1 - b + 1.0) * F - (a1 * _F(a1 + 1.0, a2, b, x)
                                     - (b - 1.0) * _F(a1, a2, b - 1.0, x))
    if relation == 3:
        lhs = (a1 + (a2 - b) * x) * F
        rhs = (a1 * (1.0 - x) * _F(a1 + 1.0, a2, b, x)
               - x * ((b - a1) * (b - a2) / b) * _F(a1, a2, b + 1.0, x))
        return lhs - rhs
    if relation == 4:
        return (1.0 - x) * F - (_F(a1 - 1.0, a2, b, x)
                                - (b - a2) / b * x * _F(a1, a2, b + 1.0, x))
    if relation == 5:
        return (1.0 - x) * F - (_F(a1, a2 - 1.0, b, x)
                                - (b - a1) / b * x * _F(a1, a2, b + 1.0, x))
    raise ValueError(f"no Gauss contiguous relation {relation!r}; use 1..5")


def gauss_diff_formula(formula: int, r: int, a1, a2, b, x):
    """Both sides of one of the four r-th derivative formulas of 2F1."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    r = int(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    P = _params(a1, a2, b)
    if formula == 1:
        lhs = product_derivative(P, x, r)
        rhs = (pochhammer_dual(a1, r) * pochhammer_dual(a2, r) / pochhammer_dual(b, r)
               * _F(a1 + r, a2 + r, b + r, x))
    elif formula == 2:
        lhs = product_derivative(P, x, r, power=a1 + (r - 1))
        rhs = pochhammer_dual(a1, r) * pow_dual(x, a1 - 1.0) * _F(a1 + r, a2, b, x)
    elif formula == 3:
        lhs = product_derivative(P, x, r, power=a2 + (r - 1))
        rhs = pochhammer_dual(a2, r) * pow_dual(x, a2 - 1.0) * _F(a1, a2 + r, b, x)
    elif formula == 4:
        lhs = product_derivative(P, x, r, power=b - 1.0)
        rhs = pochhammer_dual(b - r, r) * pow_dual(x, b - r - 1.0) * _F(a1, a2, b - r, x)
    else:
        raise ValueError(f"no Gauss differential formula {formula!r}; use 1..4")
    return lhs, rhs


def gauss_integral_rep(a1, a2, b, x, tol: float = 1e-10) -> QuadratureResult:
    """Beta-weighted integral of (1 - u x)^-a2 over [0, 1]."""
    a1, a2, b, x = as_dual(a1), as_dual(a2), as_dual(b), as_dual(x)
    if not (a1.re > 0.0 and (b - a1).re > 0.0):
        raise DomainError("integral representation needs Re(a1) > 0 and Re(b - a1) > 0")
    if not x.re < 1.0:
        raise DomainError("integral representation needs Re(x) < 1")
    pre = gamma_dual(b) / (gamma_dual(a1) * gamma_dual(b - a1))
    am1 = a1 - 1.0
    bam1 = b - a1 - 1.0
    neg_a2 = -a2

    def f(t, left, right):
        return exp(am1 * math.log(left) + bam1 * math.log(right) + neg_a2 * log(1.0 - t * x))

    res = quad_de(f, 0.0, 1.0, tol, endpoints=True, relative=True)
    return QuadratureResult(pre * res.value, res.abs_error_estimate * abs(pre), res.nodes)


ELEMENTARY_IDENTITIES = ("arcsin", "arctan", "log1p", "log_ratio", "binomial_n")


def elementary_identity(identity: str, x, n: int | None = None):
    """``(series side, closed form)`` of an elementary special case of 2F1."""
    x = as_dual(x)
    if not abs(x.re) < 1.0:
        raise DomainError(f"elementary identities need |x| < 1, got {x}")
    if identity == "arcsin":
        return x * _F(0.5, 0.5, 1.5, x * x), lift(ARCSIN, x)
    if identity == "arctan":
        return x * _F(0.5, 1.0, 1.5, -(x * x)), lift(ARCTAN, x)
    if identity == "log1p":
        return x * _F(1.0, 1.0, 2.0, -x), log(1.0 + x)
    if identity == "log_ratio":
        return 2.0 * x * _F(0.5, 1.0, 1.5, x * x), log((1.0 + x) / (1.0 - x))
    if identity == "binomial_n":
        if n is None or int(n) != n or n < 0:
            raise DomainError("binomial_n needs a nonnegative integer n")
        n = int(n)
        return _F(-float(n), 1.0, 1.0, -x), pow_dual(1.0 + x, n)
    raise ValueError(f"unknown identity {identity!r}; use one of {ELEMENTARY_IDENTITIES}")
