"""Dual generalized hypergeometric series pFq and its identities.

Parameters and argument are dual numbers.  Dual parts that a caller does not
need are simply zero; there is a single evaluator.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import kernels
from .dual import ONE, ZERO, Dual, as_dual, exp, pow_dual, pow_real_base
from .errors import (
    DegenerateParameters,
    DivergentInput,
    DomainError,
    InapplicableRelation,
    NoConvergence,
    Overflow,
    PoleError,
)
from .gamma import gamma_dual, pochhammer_dual
from .reference import QuadratureResult, nearest_pole, quad_de

__all__ = [
    "HypergeometricParams",
    "ConvergenceKind",
    "ConvergenceClass",
    "SeriesResult",
    "classify_convergence",
    "pfq",
    "pfq_weighted",
    "pfq_derivative",
    "product_derivative",
    "theta_ode_residual",
    "Relation",
    "contiguous_residual",
    "pfq_integral_rep",
    "DEFAULT_TOL",
    "DEFAULT_MAX_TERMS",
    "BOUNDARY_MAX_TERMS",
]

DEFAULT_TOL = 1e-12
DEFAULT_MAX_TERMS = 10_000
BOUNDARY_MAX_TERMS = 1_000_000
DEGENERACY_THRESHOLD = 1e-8


@dataclass(frozen=True, init=False)
class HypergeometricParams:
    numerator: tuple
    denominator: tuple

    def __init__(self, numerator=(), denominator=()):
        object.__setattr__(self, "numerator", tuple(as_dual(a) for a in numerator))
        object.__setattr__(self, "denominator", tuple(as_dual(b) for b in denominator))

    @property
    def p(self) -> int:
        return len(self.numerator)

    @property
    def q(self) -> int:
        return len(self.denominator)

    def with_numerator(self, i: int, value) -> HypergeometricParams:
        num = list(self.numerator)
        num[i] = as_dual(value)
        return HypergeometricParams(num, self.denominator)

    def with_denominator(self, j: int, value) -> HypergeometricParams:
        den = list(self.denominator)
        den[j] = as_dual(value)
        return HypergeometricParams(self.numerator, den)

    def shifted(self, r: int) -> HypergeometricParams:
        """All parameters shifted by ``r``."""
        return HypergeometricParams(
            [a + r for a in self.numerator], [b + r for b in self.denominator]
        )

    def __str__(self):
        num = ", ".join(str(a) for a in self.numerator)
        den = ", ".join(str(b) for b in self.denominator)
        return f"{self.p}F{self.q}({num}; {den})"


class ConvergenceKind(enum.Enum):
    CONVERGES_EVERYWHERE = "ConvergesEverywhere"
    CONVERGES_OPEN_UNIT_DISK = "ConvergesOpenUnitDisk"
    CONVERGES_ON_BOUNDARY = "ConvergesOnBoundary"
    TERMINATES_POLYNOMIAL = "TerminatesPolynomial"
    DIVERGES = "Diverges"
    DENOMINATOR_POLE = "DenominatorPole"


@dataclass(frozen=True)
class ConvergenceClass:
    """Tag plus payload: the degree for polynomials, the index for poles."""

    kind: ConvergenceKind
    value: int | None = None

    def __str__(self):
        if self.value is None:
            return self.kind.value
        return f"{self.kind.value}({self.value})"

    @property
    def convergent(self) -> bool:
        return self.kind not in (ConvergenceKind.DIVERGES, ConvergenceKind.DENOMINATOR_POLE)


@dataclass(frozen=True)
class SeriesResult:
    """``tail_bound`` is relative to the value, channel by channel (worst one)."""

    value: Dual
    terms_used: int
    converged: bool
    tail_bound: float


def _nonpositive_integer(z: Dual):
    return nearest_pole(z.re)


def classify_convergence(params: HypergeometricParams, x) -> ConvergenceClass:
    """Region classification, using |x| = |x.re| throughout."""
    x = as_dual(x)
    degree = None
    for a in params.numerator:
        n = _nonpositive_integer(a)
        if n is not None and a.du == 0.0:
            d = -n
            degree = d if degree is None else min(degree, d)
    pole_index = None
    pole_order = None
    for j, b in enumerate(params.denominator):
        m = _nonpositive_integer(b)
        if m is None:
            continue
        if degree is not None and -m >= degree:
            continue
        if pole_order is None or -m < pole_order:
            pole_index, pole_order = j, -m
    if pole_index is not None:
        return ConvergenceClass(ConvergenceKind.DENOMINATOR_POLE, pole_index)
    if degree is not None:
        return ConvergenceClass(ConvergenceKind.TERMINATES_POLYNOMIAL, degree)
    p, q = params.p, params.q
    if p <= q:
        return ConvergenceClass(ConvergenceKind.CONVERGES_EVERYWHERE)
    if p == q + 1:
        ax = abs(x.re)
        if ax < 1.0:
            return ConvergenceClass(ConvergenceKind.CONVERGES_OPEN_UNIT_DISK)
        if ax == 1.0:
            excess = sum(b.re for b in params.denominator) - sum(a.re for a in params.numerator)
            if excess > 0.0:
                return ConvergenceClass(ConvergenceKind.CONVERGES_ON_BOUNDARY)
        return ConvergenceClass(ConvergenceKind.DIVERGES)
    # p > q + 1: only the zero argument gives a (trivially) convergent series
    if x.re == 0.0 and x.du == 0.0:
        return ConvergenceClass(ConvergenceKind.CONVERGES_EVERYWHERE)
    return ConvergenceClass(ConvergenceKind.DIVERGES)


def _pairs(values):
    return [(v.re, v.du) for v in values]


def _admissible(params, x) -> ConvergenceClass:
    cls = classify_convergence(params, x)
    if cls.kind is ConvergenceKind.DIVERGES:
        raise DivergentInput(f"{params} diverges at x={x}")
    if cls.kind is ConvergenceKind.DENOMINATOR_POLE:
        b = params.denominator[cls.value]
        raise PoleError(
            f"denominator parameter {b} of {params} is a nonpositive integer",
            pole=_nonpositive_integer(b),
            argument=f"b{cls.value + 1}",
        )
    return cls


def _relative_tail(tail_re, tail_du, s_re, s_du):
    worst = 0.0
    for tail, s in ((tail_re, s_re), (tail_du, s_du)):
        if tail == 0.0:
            continue
        worst = max(worst, tail / abs(s) if s != 0.0 else math.inf)
    return worst


def _run_series(params, x, shifts, tol, max_terms, cls):
    fixed = cls.value + 1 if cls.kind is ConvergenceKind.TERMINATES_POLYNOMIAL else -1
    limit_ratio = abs(x.re) if params.p == params.q + 1 else 0.0
    try:
        s_re, s_du, used, tail_re, tail_du, ok = kernels.series_sum(
            _pairs(params.numerator),
            _pairs(params.denominator),
            _pairs(shifts),
            x.re,
            x.du,
            float(tol),
            int(max_terms),
            fixed,
            limit_ratio,
        )
    except ZeroDivisionError as exc:
        raise PoleError(f"{params}: {exc}") from exc
    except OverflowError as exc:
        raise Overflow(f"{params} at x={x}: {exc}") from exc
    result = SeriesResult(
        Dual(s_re, s_du), used, ok, _relative_tail(tail_re, tail_du, s_re, s_du)
    )
    if not ok:
        raise NoConvergence(
            f"{params} at x={x}: no convergence within {max_terms} terms", partial=result
        )
    return result


# ---------------------------------------------------------------------------
# Boundary |x| = 1

_BOUNDARY_START = 32
_RICHARDSON_DEPTH = 8


def _boundary_exponents(params, x):
    excess = sum(params.denominator, ZERO) - sum(params.numerator, ZERO)
    if x.re > 0.0:
        exps = [excess + m for m in range(_RICHARDSON_DEPTH + 1)]
        if x.du != 0.0:
            if not excess.re > 1.0:
                raise NoConvergence(
                    f"the dual channel of {params} at x={x} does not converge: "
                    f"it needs sum(b) - sum(a) > 1, got {excess.re!r}"
                )
            exps.insert(0, excess - 1.0)
    else:
        exps = [excess + 1.0 + m for m in range(_RICHARDSON_DEPTH + 1)]
        if x.du != 0.0:
            exps.insert(0, excess)
    return exps


def _close(a: Dual, b: Dual) -> float:
    """Worst channel-wise relative difference."""
    worst = 0.0
    for u, v in ((a.re, b.re), (a.du, b.du)):
        d = abs(u - v)
        if d == 0.0:
            continue
        worst = max(worst, d / max(abs(u), abs(v)))
    return worst


def _boundary_sum(params, x, tol):
    """Partial sums at N = 32, 64, ... accelerated by Richardson extrapolation.

    The remainder of the partial sum S_N has an expansion in powers N^-e with
    dual exponents e known from the parameters, so each column of the table
    removes one power exactly in dual arithmetic.
    """
    exps = _boundary_exponents(params, x)
    factors = [pow_real_base(2.0, e) for e in exps]
    num = _pairs(params.numerator)
    den = _pairs(params.denominator)
    state = None
    prev_row = None
    prev_best = None
    best = None
    best_err = math.inf
    n = _BOUNDARY_START
    used = 0
    try:
        while n <= BOUNDARY_MAX_TERMS:
            sums, state = kernels.partial_sums(num, den, x.re, x.du, [n], state)
            used = n
            row = [Dual(*sums[0])]
            if prev_row is not None:
                for m in range(1, min(len(prev_row), len(factors)) + 1):
                    f = factors[m - 1]
                    row.append((f * row[m - 1] - prev_row[m - 1]) / (f - 1.0))
            estimate = row[-1]
            if prev_best is not None:
                err = _close(estimate, prev_best)
                if err <= best_err:
                    best, best_err = estimate, err
                if err <= tol:
                    break
            prev_best = estimate
            prev_row = row
            n *= 2
    except ZeroDivisionError as exc:
        raise PoleError(f"{params}: {exc}") from exc
    except OverflowError as exc:
        raise Overflow(f"{params} at x={x}: {exc}") from exc
    if best is None:
        best = prev_best
    return SeriesResult(best, used, best_err <= tol, best_err)


# ---------------------------------------------------------------------------
# Series entry points


def pfq(params: HypergeometricParams, x, tol: float = DEFAULT_TOL,
        max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Sum pFq(a; b; x) in dual arithmetic.

    Inside the convergence region the series is summed until three successive
    terms are negligible in both channels and a geometric tail estimate agrees.
    On the boundary |x| = 1 (p = q + 1) the partial sums are extrapolated.
    """
    x = as_dual(x)
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    cls = _admissible(params, x)
    if cls.kind is ConvergenceKind.CONVERGES_ON_BOUNDARY:
        return _boundary_sum(params, x, tol)
    return _run_series(params, x, (), tol, max_terms, cls)


def pfq_weighted(params: HypergeometricParams, x, shifts, tol: float = DEFAULT_TOL,
                 max_terms: int = DEFAULT_MAX_TERMS) -> SeriesResult:
    """Sum of term_k * prod(k + s) over the weight shifts ``s``."""
    x = as_dual(x)
    shifts = [as_dual(s) for s in shifts]
    cls = _admissible(params, x)
    if cls.kind is ConvergenceKind.CONVERGES_ON_BOUNDARY:
        raise DivergentInput("weighted sums are not evaluated on the boundary")
    return _run_series(params, x, shifts, tol, max_terms, cls)


def pfq_derivative(params: HypergeometricParams, x, r: int, tol: float = DEFAULT_TOL,
                   max_terms: int = DEFAULT_MAX_TERMS) -> Dual:
    """(d/dx)^r pFq = prod (a)_r / prod (b)_r * pFq(a + r; b + r; x)."""
    r = int(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    x = as_dual(x)
    if r == 0:
        return pfq(params, x, tol, max_terms).value
    pre = ONE
    for a in params.numerator:
        pre = pre * pochhammer_dual(a, r)
    if pre == 0.0:
        return ZERO
    den = ONE
    for b in params.denominator:
        if _nonpositive_integer(b) is not None and _nonpositive_integer(b) > -r:
            raise PoleError(f"(b)_{r} vanishes for b={b}", pole=_nonpositive_integer(b))
        den = den * pochhammer_dual(b, r)
    return pre / den * pfq(params.shifted(r), x, tol, max_terms).value


def _power_derivative(params, x, i, power, tol, max_terms):
    # (d/dx)^i [x^power * F(x)], term by term
    if power is None:
        if i == 0:
            return pfq(params, x, tol, max_terms).value
        if x.re == 0.0:
            raise DomainError("term-wise derivative needs x.re != 0")
        shifts = [Dual(-m) for m in range(i)]
        s = pfq_weighted(params, x, shifts, tol, max_terms).value
        return s * pow_dual(x, -i)
    power = as_dual(power)
    shifts = [power - m for m in range(i)]
    s = pfq_weighted(params, x, shifts, tol, max_terms).value
    return s * pow_dual(x, power - i)


def product_derivative(params: HypergeometricParams, x, r: int, power=None,
                       exp_sign: float = 0.0, tol: float = DEFAULT_TOL,
                       max_terms: int = DEFAULT_MAX_TERMS) -> Dual:
    """(d/dx)^r [x^power * exp(exp_sign * x) * pFq(x)], differentiated term by term.

    ``power=None`` drops the power factor.  The exponential factor is handled
    by the Leibniz rule.  Fractional powers need x.re > 0.
    """
    x = as_dual(x)
    r = int(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if exp_sign == 0.0:
        return _power_derivative(params, x, r, power, tol, max_terms)
    total = ZERO
    for i in range(r + 1):
        coeff = math.comb(r, i) * exp_sign ** (r - i)
        total = total + coeff * _power_derivative(params, x, i, power, tol, max_terms)
    return exp(exp_sign * x) * total


def theta_ode_residual(params: HypergeometricParams, x, tol: float = DEFAULT_TOL,
                       max_terms: int = DEFAULT_MAX_TERMS) -> Dual:
    """[theta prod(theta + b - 1) - x prod(theta + a)] F, applied term by term."""
    x = as_dual(x)
    left = pfq_weighted(params, x, [ZERO] + [b - 1.0 for b in params.denominator],
                        tol, max_terms).value
    right = pfq_weighted(params, x, list(params.numerator), tol, max_terms).value
    return left - x * right


# ---------------------------------------------------------------------------
# Contiguous relations


class Relation(str, enum.Enum):
    """Contiguous relations of pFq, named after the functions they connect."""

    NUMERATOR_PAIR = "numerator-pair"
    NUMERATOR_DENOMINATOR = "numerator-denominator"
    RAISE_DENOMINATORS_P_LT_Q = "raise-denominators-p<q"
    RAISE_DENOMINATORS_P_EQ_Q = "raise-denominators-p=q"
    RAISE_DENOMINATORS_P_EQ_Q1 = "raise-denominators-p=q+1"
    LOWER_NUMERATOR_P_LE_Q = "lower-numerator-p<=q"
    LOWER_NUMERATOR_P_EQ_Q1 = "lower-numerator-p=q+1"


def _check_distinct_denominators(params):
    den = params.denominator
    for i in range(len(den)):
        for j in range(i + 1, len(den)):
            if abs(den[i].re - den[j].re) <= DEGENERACY_THRESHOLD:
                raise DegenerateParameters(
                    f"denominators b{i + 1} and b{j + 1} coincide in real part"
                )


def _u_coefficient(params, j):
    b = params.denominator[j]
    out = ONE / b
    for a in params.numerator:
        out = out * (a - b)
    for s, bs in enumerate(params.denominator):
        if s != j:
            out = out / (bs - b)
    return out


def _w_coefficient(params, j, k):
    b = params.denominator[j]
    out = ONE / b
    for s, bs in enumerate(params.denominator):
        if s != j:
            out = out / (bs - b)
    for s, a in enumerate(params.numerator):
        if s != k:
            out = out * (a - b)
    return out


def contiguous_residual(relation, params: HypergeometricParams, x, index: int | None = None,
                        tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS) -> Dual:
    """LHS - RHS of a contiguous relation; ``index`` is 1-based where used."""
    relation = Relation(relation)
    x = as_dual(x)
    p, q = params.p, params.q

    def F(ps):
        return pfq(ps, x, tol, max_terms).value

    if p < 1:
        raise InapplicableRelation("contiguous relations need p >= 1")
    a1 = params.numerator[0]
    if relation is Relation.NUMERATOR_PAIR:
        if index is None or not 2 <= index <= p:
            raise InapplicableRelation(f"numerator-pair needs 2 <= k <= p={p}")
        ak = params.numerator[index - 1]
        lhs = (a1 - ak) * F(params)
        rhs = (a1 * F(params.with_numerator(0, a1 + 1.0))
               - ak * F(params.with_numerator(index - 1, ak + 1.0)))
        return lhs - rhs
    if relation is Relation.NUMERATOR_DENOMINATOR:
        if index is None or not 1 <= index <= q:
            raise InapplicableRelation(f"numerator-denominator needs 1 <= k <= q={q}")
        bk = params.denominator[index - 1]
        lhs = (a1 - bk + 1.0) * F(params)
        rhs = (a1 * F(params.with_numerator(0, a1 + 1.0))
               - (bk - 1.0) * F(params.with_denominator(index - 1, bk - 1.0)))
        return lhs - rhs

    required = {
        Relation.RAISE_DENOMINATORS_P_LT_Q: p < q,
        Relation.RAISE_DENOMINATORS_P_EQ_Q: p == q,
        Relation.RAISE_DENOMINATORS_P_EQ_Q1: p == q + 1,
        Relation.LOWER_NUMERATOR_P_LE_Q: p <= q,
        Relation.LOWER_NUMERATOR_P_EQ_Q1: p == q + 1,
    }
    if not required[relation]:
        raise InapplicableRelation(f"{relation.value} does not apply to p={p}, q={q}")
    _check_distinct_denominators(params)

    if relation in (Relation.LOWER_NUMERATOR_P_LE_Q, Relation.LOWER_NUMERATOR_P_EQ_Q1):
        if index is None or not 1 <= index <= p:
            raise InapplicableRelation(f"{relation.value} needs 1 <= k <= p={p}")
        k = index - 1
        ak = params.numerator[k]
        total = ZERO
        for j, b in enumerate(params.denominator):
            total = total + _w_coefficient(params, j, k) * F(params.with_denominator(j, b + 1.0))
        rhs = F(params.with_numerator(k, ak - 1.0)) + x * total
        lhs = F(params)
        if relation is Relation.LOWER_NUMERATOR_P_EQ_Q1:
            lhs = (1.0 - x) * lhs
        return lhs - rhs

    total = ZERO
    for j, b in enumerate(params.denominator):
        total = total + _u_coefficient(params, j) * F(params.with_denominator(j, b + 1.0))
    raised = F(params.with_numerator(0, a1 + 1.0))
    if relation is Relation.RAISE_DENOMINATORS_P_LT_Q:
        return a1 * F(params) - (a1 * raised - x * total)
    if relation is Relation.RAISE_DENOMINATORS_P_EQ_Q:
        return (a1 + x) * F(params) - (a1 * raised - x * total)
    excess = sum(params.numerator, ZERO) - sum(params.denominator, ZERO)
    lhs = ((1.0 - x) * a1 + excess * x) * F(params)
    return lhs - ((1.0 - x) * a1 * raised - x * total)


# ---------------------------------------------------------------------------
# Integral representations


def _beta_prefactor(a: Dual, b: Dual) -> Dual:
    return gamma_dual(b) / (gamma_dual(a) * gamma_dual(b - a))


def pfq_integral_rep(params: HypergeometricParams, x, form="euler_01", tol: float = 1e-10,
                     scale: float | None = None) -> QuadratureResult:
    """pFq as a beta-weighted integral of the (p-1)F(q-1) with a1, b1 removed.

    ``form`` is ``"euler_01"`` (over [0, 1]), ``"infinite"`` (over [0, inf),
    with u -> u/(1+u)), or ``"scaled"`` (the same with u -> s*u/(1+s*u) for
    ``scale`` s > 0).  A tuple ``("scaled", s)`` is also accepted.
    """
    x = as_dual(x)
    if isinstance(form, tuple):
        form, scale = form
    if params.p < 1 or params.q < 1:
        raise DomainError("integral representation needs p >= 1 and q >= 1")
    a = params.numerator[0]
    b = params.denominator[0]
    if not (a.re > 0.0 and b.re > 0.0 and (b - a).re > 0.0):
        raise DomainError("integral representation needs Re(a1), Re(b1), Re(b1 - a1) > 0")
    inner = HypergeometricParams(params.numerator[1:], params.denominator[1:])
    am1 = a - 1.0
    pre = _beta_prefactor(a, b)

    def inner_f(z):
        return pfq(inner, z).value

    if form == "euler_01":
        e2 = b - a - 1.0

        def integrand(t, left, right):
            return exp(am1 * math.log(left) + e2 * math.log(right)) * inner_f(t * x)

        res = quad_de(integrand, 0.0, 1.0, tol, endpoints=True, relative=True)
    elif form in ("infinite", "scaled"):
        s = 1.0 if form == "infinite" else scale
        if s is None or not s > 0.0:
            raise DomainError("the scaled form needs a positive scale")
        if form == "scaled":
            pre = pre * pow_real_base(s, a)
        neg_b = -b

        def integrand(t, left, right):
            su = s * t
            return (exp(am1 * math.log(t) + neg_b * math.log1p(su))
                    * inner_f((su / (1.0 + su)) * x))

        res = quad_de(integrand, 0.0, math.inf, tol, endpoints=True, relative=True)
    else:
        raise ValueError(f"unknown integral form {form!r}")
    return QuadratureResult(pre * res.value, res.abs_error_estimate * abs(pre), res.nodes)
