"""Dual gamma function, dual Pochhammer symbol and the limit approximant."""

from __future__ import annotations

import math

from .dual import ONE, Dual, as_dual, exp
from .errors import DomainError, Overflow, PoleError, ZeroFactor
from .reference import (
    POLE_THRESHOLD,
    QuadratureResult,
    digamma,
    gamma_real,
    nearest_pole,
    quad_de,
)

__all__ = ["gamma_dual", "pochhammer_dual", "gamma_limit_approx", "gamma_dual_quadrature"]


def _require_regular(a: float, argument=None):
    n = nearest_pole(a)
    if n is not None:
        where = f" ({argument})" if argument else ""
        raise PoleError(
            f"gamma pole at {n}{where}: real part {a!r}", pole=n, argument=argument
        )


def gamma_dual(a, argument=None) -> Dual:
    """Gamma(a1) + eps*a2*Gamma(a1)*psi(a1)."""
    a = as_dual(a)
    _require_regular(a.re, argument)
    g = gamma_real(a.re)
    if a.du == 0.0:
        return Dual(g, 0.0)
    return Dual(g, a.du * g * digamma(a.re))


def pochhammer_dual(a, k: int) -> Dual:
    """Rising factorial (a)_k; negative k via (a)_{-k} = (-1)^k / (1-a)_k."""
    a = as_dual(a)
    k = int(k)
    if k == 0:
        return ONE
    if k > 0:
        result = a
        for j in range(1, k):
            result = result * (a + j)
        return result
    m = -k
    b = 1.0 - a
    for j in range(m):
        r = b.re + j
        if abs(r) <= POLE_THRESHOLD * max(1.0, abs(round(r))):
            raise ZeroFactor(f"(1-a)_{m} has a factor with zero real part at j={j}")
    sign = -1.0 if m % 2 else 1.0
    return sign / pochhammer_dual(b, m)


def gamma_limit_approx(a, k: int) -> Dual:
    """(k-1)! * k**a / (a)_k without overflow.

    The ratio k!/(a)_k is accumulated factor by factor as a mantissa and a
    binary exponent; the remaining k**(a-1) and the exponent are applied in a
    single exponentiation at the end.
    """
    a = as_dual(a)
    k = int(k)
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_regular(a.re)
    mant = 1.0
    expo = 0
    recips = []
    for j in range(k):
        f = a.re + j
        if f == 0.0:
            raise PoleError(f"(a)_{k} vanishes at j={j}", pole=-j)
        mant *= (j + 1.0) / f
        mant, e = math.frexp(mant)
        expo += e
        recips.append(1.0 / f)
    log_k = math.log(k)
    scale = (a.re - 1.0) * log_k + expo * math.log(2.0)
    if scale + math.log(abs(mant)) > 709.0:
        raise Overflow("limit approximant overflows")
    re = mant * math.exp(scale)
    rel_du = a.du * (log_k - math.fsum(recips))
    return Dual(re, re * rel_du)


def gamma_dual_quadrature(a, tol: float = 1e-10) -> QuadratureResult:
    """Integral of t^(a-1) e^(-t) over [0, inf) in dual arithmetic.

    The dual part of the exponent yields the log-weighted integral that
    defines Gamma'(a), so this is an oracle independent of the digamma path.
    """
    a = as_dual(a)
    if not a.re > 0.0:
        raise DomainError("the gamma integral needs a.re > 0")
    am1 = a - 1.0

    def integrand(t):
        return exp(am1 * math.log(t) - t)

    return quad_de(integrand, 0.0, math.inf, tol, relative=True)
