"""Dual beta function through the gamma relation and through quadrature."""

from __future__ import annotations

import math

from .dual import Dual, as_dual, exp
from .errors import DomainError
from .gamma import gamma_dual
from .reference import QuadratureResult, quad_de

__all__ = ["beta_dual", "beta_dual_quadrature"]


def beta_dual(a, c) -> Dual:
    """Gamma_d(a) Gamma_d(c) / Gamma_d(a + c)."""
    a = as_dual(a)
    c = as_dual(c)
    ga = gamma_dual(a, argument="a")
    gc = gamma_dual(c, argument="c")
    gac = gamma_dual(a + c, argument="a+c")
    return ga * gc / gac


def beta_dual_quadrature(a, c, tol: float = 1e-10) -> QuadratureResult:
    """Integrate t^(a-1) (1-t)^(c-1) over [0, 1] in dual arithmetic."""
    a = as_dual(a)
    c = as_dual(c)
    if not (a.re > 0.0 and c.re > 0.0):
        raise DomainError("beta integral needs positive real parts")
    am1 = a - 1.0
    cm1 = c - 1.0

    def integrand(t, left, right):
        return exp(am1 * math.log(left) + cm1 * math.log(right))

    return quad_de(integrand, 0.0, 1.0, tol, endpoints=True, relative=True)
