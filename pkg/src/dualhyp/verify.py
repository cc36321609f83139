"""Randomized verification suites.

Each suite checks one family of identities against an independent oracle
(finite differences, quadrature, a plain-real series or a closed form) and
reports the worst residual per identity.  Every suite draws from its own
``random.Random`` stream seeded with ``"<suite>:<seed>"``, so results depend
only on the seed and the suite name, never on which other suites ran.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .beta import beta_dual, beta_dual_quadrature
from .dual import (
    ELEMENTARY,
    Dual,
    antiderivative,
    format_dual,
    lift,
    parse_dual,
    pow_dual,
    power_k,
    real_functions,
)
from .errors import DualHypError
from .gamma import gamma_dual, gamma_dual_quadrature, gamma_limit_approx, pochhammer_dual
from .hypergeometric import (
    HypergeometricParams,
    Relation,
    contiguous_residual,
    pfq,
    pfq_derivative,
    pfq_integral_rep,
    theta_ode_residual,
)
from .reference import EULER_GAMMA, FDConfig, digamma, finite_diff, gamma_real, quad_de, trigamma
from .special.confluent import (
    INTEGRAL_FORMULAS,
    confluent,
    confluent_contiguous_residual,
    confluent_diff_formula,
    confluent_integral_formula,
    confluent_integral_rep,
    confluent_integrand,
)
from .special.gauss import (
    ELEMENTARY_IDENTITIES,
    elementary_identity,
    euler_transform,
    gauss,
    gauss_contiguous_residual,
    gauss_diff_formula,
    gauss_integral_rep,
    gauss_ode_residual,
    gauss_sum_at_1,
    pfaff_pfaff,
    pfaff_transform,
)

__all__ = ["Check", "SUITES", "run_suite", "format_check", "report", "real_pfq"]

# Relative errors are measured against max(|reference|, FD_FLOOR) when the
# reference is a finite difference, so derivatives that happen to vanish do
# not turn FD noise into a spurious failure.
FD_FLOOR = 1e-3
TINY = 1e-300


@dataclass(frozen=True)
class Check:
    name: str
    cases: int
    worst: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.worst <= self.limit


def format_check(check: Check) -> str:
    status = "PASS" if check.passed else "FAIL"
    return (f"{status} {check.name} cases={check.cases} "
            f"worst={check.worst:.2e} limit={check.limit:.2e}")


# ---------------------------------------------------------------------------
# error measures


def scaled(res: Dual, ref: Dual) -> float:
    """Channel-wise |res| / (1 + |ref|), the worst of the two."""
    return max(abs(res.re) / (1.0 + abs(ref.re)), abs(res.du) / (1.0 + abs(ref.du)))


def rel(x: Dual, ref: Dual) -> float:
    """Relative error of a dual value.

    The dual channel is scaled by max(|ref.du|, |ref.re|): it is a
    sensitivity of the real channel and is only meaningful relative to it.
    """
    e_re = abs(x.re - ref.re) / max(abs(ref.re), TINY)
    e_du = abs(x.du - ref.du) / max(abs(ref.du), abs(ref.re), TINY)
    return max(e_re, e_du)


def rel_fd(value: float, fd: float) -> float:
    return abs(value - fd) / max(abs(fd), FD_FLOOR)


class _Tally:
    def __init__(self, name, limit):
        self.name = name
        self.limit = limit
        self.cases = 0
        self.worst = 0.0

    def add(self, err: float):
        self.cases += 1
        if not err <= self.worst:
            self.worst = err if err == err else math.inf

    def run(self, cases, fn):
        for i in range(cases):
            try:
                self.add(fn(i))
            except (DualHypError, ArithmeticError, ValueError):
                self.add(math.inf)
        return self.check()

    def check(self) -> Check:
        return Check(self.name, self.cases, self.worst, self.limit)


# ---------------------------------------------------------------------------
# samplers


def _u(rng, lo, hi):
    return rng.uniform(lo, hi)


def _dual(rng, lo, hi, du=2.0):
    return Dual(rng.uniform(lo, hi), rng.uniform(-du, du))


def _off_integers(rng, lo, hi, gap=0.05):
    while True:
        v = rng.uniform(lo, hi)
        if abs(v - round(v)) >= gap:
            return v


def _numerators(rng, p):
    return [_dual(rng, 0.2, 3.0) for _ in range(p)]


def _denominators(rng, q):
    while True:
        vals = [_dual(rng, 1.2, 4.0) for _ in range(q)]
        res = sorted(v.re for v in vals)
        if all(b - a >= 0.15 for a, b in zip(res, res[1:])):
            return vals


def _argument(rng, p, q, du=2.0):
    r = 0.75 if p == q + 1 else 2.0
    return _dual(rng, -r, r, du)


def _params(rng, shape):
    p, q = shape
    return HypergeometricParams(_numerators(rng, p), _denominators(rng, q))


# ---------------------------------------------------------------------------
# plain-real series oracle


def real_pfq(num, den, x: float, max_terms: int = 100_000) -> float:
    """Plain-float pFq, summed with fsum until the terms are negligible."""
    t = 1.0
    terms = [1.0]
    s = 1.0
    small = 0
    for k in range(max_terms):
        p = x
        for a in num:
            p *= a + k
        q = k + 1.0
        for b in den:
            q *= b + k
        t = t * (p / q)
        terms.append(t)
        s += t
        if abs(t) <= 1e-18 * abs(s):
            small += 1
            if small >= 5:
                return math.fsum(terms)
        else:
            small = 0
    raise ArithmeticError("real series did not converge")


def _real_partial_sum(num, den, x: float, count: int) -> float:
    # same operation order as the real channel of the series kernel
    t = 1.0
    s = 0.0
    for k in range(count):
        s += t
        p = x
        for a in num:
            p *= a + k
        q = k + 1.0
        for b in den:
            q *= b + k
        t = t * (p / q)
    return s


# ---------------------------------------------------------------------------
# suites

SUITES = {}


def _suite(name):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


# domains (lo, hi) for sampling each elementary function
_DOMAINS = {
    "exp": (-5.0, 5.0),
    "sin": (-6.0, 6.0),
    "cos": (-6.0, 6.0),
    "tan": (-1.4, 1.4),
    "cot": (0.1, 3.0),
    "sec": (-1.4, 1.4),
    "csc": (0.1, 3.0),
    "log": (0.05, 10.0),
    "arcsin": (-0.95, 0.95),
    "arctan": (-10.0, 10.0),
}


def _elementary_cases():
    out = [(ELEMENTARY[tag], lo, hi) for tag, (lo, hi) in _DOMAINS.items()]
    for k in (-3, -1, 2, 5):
        lo, hi = (0.2, 3.0) if k < 0 else (-3.0, 3.0)
        out.append((power_k(k), lo, hi))
    return out


@_suite("dual_core")
def _dual_core(rng, n=200):
    checks = []
    fns = _elementary_cases()
    for f, lo, hi in fns:
        f0 = real_functions(f)[0]

        def case(_, f=f, f0=f0, lo=lo, hi=hi):
            x = _dual(rng, lo, hi)
            return rel_fd(lift(f, x).du, x.du * finite_diff(f0, x.re))

        checks.append(_Tally(f"lift_fd.{f}", 1e-6).run(n, case))

    def product_rule(_):
        while True:
            (f, lo_f, hi_f), (g, lo_g, hi_g) = rng.choice(fns), rng.choice(fns)
            lo, hi = max(lo_f, lo_g), min(hi_f, hi_g)
            if lo < hi:
                break
        x1 = _u(rng, lo, hi)
        h = lift(f, Dual(x1, 1.0)) * lift(g, Dual(x1, 1.0))
        (f0, f1, _), (g0, g1, _) = real_functions(f), real_functions(g)
        ref = f1(x1) * g0(x1) + f0(x1) * g1(x1)
        return abs(h.du - ref) / max(abs(ref), 1.0)

    checks.append(_Tally("product_rule", 1e-12).run(n, product_rule))

    outer = [ELEMENTARY[t] for t in ("exp", "sin", "cos", "arctan")]

    def chain_rule(_):
        g, lo, hi = rng.choice(fns)
        f = rng.choice(outer)
        x = _dual(rng, lo, hi)
        y = lift(f, lift(g, x))
        (g0, g1, _), f1 = real_functions(g), real_functions(f)[1]
        ref = f1(g0(x.re)) * g1(x.re) * x.du
        return abs(y.du - ref) / max(abs(ref), 1.0)

    checks.append(_Tally("chain_rule", 1e-12).run(n, chain_rule))

    def nilpotent(_):
        e = Dual(0.0, _u(rng, -1e3, 1e3)) * Dual(0.0, _u(rng, -1e3, 1e3))
        return abs(e.re) + abs(e.du)

    checks.append(_Tally("nilpotent", 0.0).run(n, nilpotent))

    def integer_power(_):
        a = Dual(rng.choice((-1.0, 1.0)) * _u(rng, 0.3, 3.0), _u(rng, -2.0, 2.0))
        k = rng.randint(-6, 6)
        ref = Dual(a.re ** k, a.re ** k * a.du * k / a.re)
        return rel(pow_dual(a, k), ref)

    checks.append(_Tally("integer_power", 1e-12).run(n, integer_power))

    def self_division(_):
        x = Dual(rng.choice((-1.0, 1.0)) * _u(rng, 0.01, 100.0), _u(rng, -100.0, 100.0))
        q = x / x
        return abs(q.re - 1.0) + abs(q.du)

    checks.append(_Tally("self_division", 0.0).run(n, self_division))

    def literal_round_trip(_):
        x = Dual(rng.uniform(-1e6, 1e6) * 10.0 ** rng.randint(-20, 20),
                 rng.uniform(-1e6, 1e6) * 10.0 ** rng.randint(-20, 20))
        return 0.0 if parse_dual(format_dual(x)) == x else 1.0

    checks.append(_Tally("literal_round_trip", 0.0).run(n, literal_round_trip))

    for f, lo, hi in fns + [(power_k(-1), -3.0, -0.2)]:
        f0, f1, _ = real_functions(f)
        label = f"{f}" if lo > 0.0 or f.tag != "power_k" or f.k != -1 else f"{f}.negative"

        def value(_, f=f, f0=f0, lo=lo, hi=hi):
            x1 = _u(rng, lo, hi)
            return rel_fd(antiderivative(f, Dual(x1, 1.0)).du, f0(x1))

        def slope(_, f=f, f1=f1, lo=lo, hi=hi):
            x1 = _u(rng, lo, hi)
            fd = finite_diff(lambda t: antiderivative(f, Dual(t, 1.0)).du, x1)
            return rel_fd(fd, f1(x1))

        checks.append(_Tally(f"antiderivative.{label}", 1e-10).run(n, value))
        checks.append(_Tally(f"antiderivative_slope.{label}", 1e-6).run(n // 4, slope))
    return checks


@_suite("real_reference")
def _real_reference(rng, n=200):
    checks = []

    def gamma_recurrence(_):
        x = _off_integers(rng, -8.0, 30.0)
        return abs(gamma_real(x + 1.0) - x * gamma_real(x)) / abs(gamma_real(x + 1.0))

    def reflection(_):
        x = _off_integers(rng, -5.0, 5.0)
        ref = math.pi / math.sin(math.pi * x)
        return abs(gamma_real(x) * gamma_real(1.0 - x) - ref) / abs(ref)

    def digamma_recurrence(_):
        x = _off_integers(rng, -8.0, 30.0)
        return abs(digamma(x + 1.0) - digamma(x) - 1.0 / x) / (1.0 + abs(digamma(x)))

    def trigamma_recurrence(_):
        x = _off_integers(rng, -8.0, 30.0)
        return abs(trigamma(x + 1.0) - trigamma(x) + 1.0 / (x * x)) / (1.0 + abs(trigamma(x)))

    def digamma_fd(_):
        x = _u(rng, 0.2, 20.0)
        fd = finite_diff(gamma_real, x) / gamma_real(x)
        return abs(digamma(x) - fd) / (1.0 + abs(fd))

    def trigamma_fd(_):
        x = _u(rng, 0.2, 20.0)
        fd = finite_diff(digamma, x)
        return abs(trigamma(x) - fd) / (1.0 + abs(fd))

    def gamma_integral(_):
        x = _u(rng, 0.5, 8.0)
        res = quad_de(lambda t: math.exp((x - 1.0) * math.log(t) - t), 0.0, math.inf,
                      1e-12, relative=True)
        return abs(res.value.re - gamma_real(x)) / gamma_real(x)

    def euler_constant(_):
        return abs(-digamma(1.0) - EULER_GAMMA) / EULER_GAMMA

    checks.append(_Tally("gamma_recurrence", 1e-12).run(n, gamma_recurrence))
    checks.append(_Tally("gamma_reflection", 1e-12).run(n, reflection))
    checks.append(_Tally("digamma_recurrence", 1e-12).run(n, digamma_recurrence))
    checks.append(_Tally("trigamma_recurrence", 1e-12).run(n, trigamma_recurrence))
    checks.append(_Tally("digamma_fd", 1e-8).run(n, digamma_fd))
    checks.append(_Tally("trigamma_fd", 1e-8).run(n, trigamma_fd))
    checks.append(_Tally("gamma_integral", 1e-9).run(50, gamma_integral))
    checks.append(_Tally("euler_constant", 1e-15).run(1, euler_constant))
    return checks


def gamma_spot_values():
    """The closed-form dual gamma values at 1, 2 and 3 for b in {1, 2, -3}."""
    g = -digamma(1.0)
    out = []
    for b in (1.0, 2.0, -3.0):
        out.append((Dual(1.0, b), Dual(1.0, -b * g)))
        out.append((Dual(2.0, b), Dual(1.0, b * (1.0 - g))))
        out.append((Dual(3.0, b), Dual(2.0, 2.0 * b * (1.5 - g))))
    return out


@_suite("gamma")
def _gamma(rng, n=200):
    spots = gamma_spot_values()

    def spot(i):
        a, ref = spots[i]
        return rel(gamma_dual(a), ref)

    def functional(_):
        a = Dual(_off_integers(rng, 0.1, 15.0, 0.0), rng.choice((-2.0, 0.0, 1.0, 3.0)))
        return rel(a * gamma_dual(a), gamma_dual(a + 1.0))

    def shifted_product(_):
        a = _dual(rng, 0.1, 10.0)
        k = rng.randint(0, 12)
        return rel(pochhammer_dual(a, k) * gamma_dual(a), gamma_dual(a + k))

    return [
        _Tally("spot_values", 1e-12).run(len(spots), spot),
        _Tally("functional_identity", 1e-11).run(n, functional),
        _Tally("shifted_product", 1e-10).run(n, shifted_product),
    ]


def _product(a: Dual, k: int) -> Dual:
    out = Dual(1.0)
    for j in range(k):
        out = out * (a + j)
    return out


_POLY_FD = FDConfig(base_step=1e-2, richardson_levels=5)


@_suite("pochhammer")
def _pochhammer(rng, n=200):
    def identity_1(_):
        m = rng.randint(1, 10)
        k = rng.randint(0, 10)
        b = _u(rng, -2.0, 2.0)

        def ratio(v):
            return math.prod(v + j for j in range(k))

        # the ratio is a polynomial in m, so a wide step loses nothing to
        # truncation once Richardson levels exceed its degree
        fd = finite_diff(ratio, m, _POLY_FD)
        ref = Dual(math.factorial(m + k - 1) / math.factorial(m - 1), b * fd)
        return rel(pochhammer_dual(Dual(m, b), k), ref)

    def generic(lo=0.1, hi=6.0):
        return Dual(_off_integers(rng, lo, hi), _u(rng, -2.0, 2.0))

    def identity_2(_):
        a = generic()
        m, k = rng.randint(0, 8), rng.randint(0, 8)
        lhs = pochhammer_dual(a, m + k)
        r1 = pochhammer_dual(a, m) * pochhammer_dual(a + m, k)
        r2 = pochhammer_dual(a, k) * pochhammer_dual(a + k, m)
        return max(rel(r1, lhs), rel(r2, lhs))

    def identity_3(_):
        a = generic()
        k = rng.randint(1, 8)
        neg = pochhammer_dual(a, -k)
        sign = -1.0 if k % 2 else 1.0
        printed = sign / pochhammer_dual(1.0 - a, k)
        via_gamma = gamma_dual(a - k) / gamma_dual(a)
        return max(rel(neg, printed), rel(neg, via_gamma), rel(neg * _product(a - k, k), Dual(1.0)))

    def identity_4(_):
        a = generic()
        n_ = rng.randint(0, 10)
        k = rng.randint(0, n_)
        sign = -1.0 if k % 2 else 1.0
        rhs = sign * pochhammer_dual(a, n_) / pochhammer_dual(1.0 - a - n_, k)
        return rel(rhs, pochhammer_dual(a, n_ - k))

    def identity_5(_):
        a = generic(-6.0, 6.0)
        k = rng.randint(0, 10)
        sign = -1.0 if k % 2 else 1.0
        return rel(sign * pochhammer_dual(a - k + 1.0, k), _product(-a, k))

    def identity_6(_):
        a = generic(0.1, 8.0)
        k = rng.randint(0, 10)
        lhs = pochhammer_dual(a / 2.0 + 1.0, k) / pochhammer_dual(a / 2.0, k)
        return rel(lhs, (a + 2.0 * k) / a)

    return [
        _Tally("identity_1", 1e-6).run(n, identity_1),
        _Tally("identity_2", 1e-12).run(n, identity_2),
        _Tally("identity_3", 1e-10).run(n, identity_3),
        _Tally("identity_4", 1e-11).run(n, identity_4),
        _Tally("identity_5", 1e-12).run(n, identity_5),
        _Tally("identity_6", 1e-12).run(n, identity_6),
    ]


@_suite("beta")
def _beta(rng, n=200):
    def draw():
        return Dual(_u(rng, 0.3, 8.0), rng.choice((-1.0, 0.0, 2.0)))

    def symmetry(_):
        a, c = draw(), draw()
        return rel(beta_dual(c, a), beta_dual(a, c))

    def relation_1(_):
        a, c = draw(), draw()
        lhs = beta_dual(a, c + 1.0)
        return max(rel(c / a * beta_dual(a + 1.0, c), lhs),
                   rel(c / (a + c) * beta_dual(a, c), lhs))

    def relation_2(_):
        a, c, e = draw(), draw(), draw()
        lhs = beta_dual(a, c) * beta_dual(a + c, e)
        return max(rel(beta_dual(c, e) * beta_dual(c + e, a), lhs),
                   rel(beta_dual(e, a) * beta_dual(a + e, c), lhs))

    def relation_3(_):
        a, c, e, g = draw(), draw(), draw(), draw()
        lhs = beta_dual(a, c) * beta_dual(a + c, e) * beta_dual(a + c + e, g)
        rhs = (gamma_dual(a) * gamma_dual(c) * gamma_dual(e) * gamma_dual(g)
               / gamma_dual(a + c + e + g))
        return rel(lhs, rhs)

    return [
        _Tally("symmetry", 1e-12).run(n, symmetry),
        _Tally("relation_1", 1e-11).run(n, relation_1),
        _Tally("relation_2", 1e-10).run(n, relation_2),
        _Tally("relation_3", 1e-10).run(n, relation_3),
    ]


LIMIT_POINTS = (Dual(0.5, 0.0), Dual(1.7, 1.0), Dual(3.0, 2.0))
LIMIT_ORDERS = (10**2, 10**3, 10**4, 10**5)


def limit_errors(a: Dual):
    ref = gamma_dual(a)
    return [rel(gamma_limit_approx(a, k), ref) for k in LIMIT_ORDERS]


@_suite("limit")
def _limit(rng):
    checks = []
    for a in LIMIT_POINTS:
        errs = limit_errors(a)
        ratio = max(e1 / e0 for e0, e1 in zip(errs, errs[1:]))
        checks.append(Check(f"monotone.{format_dual(a)}", len(errs), ratio, 0.99))
        checks.append(Check(f"final_error.{format_dual(a)}", 1, errs[-1], 1e-3))
    return checks


_FORWARD_SHAPES = ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3))


def _real_parts(values):
    return [v.re for v in values]


@_suite("pfq_forward")
def _pfq_forward(rng, n=200):
    def real_params(shape):
        p, q = shape
        return [_u(rng, 0.2, 3.0) for _ in range(p)], [v.re for v in _denominators(rng, q)]

    def collapse(_):
        shape = rng.choice(_FORWARD_SHAPES)
        num, den = real_params(shape)
        x = _argument(rng, *shape).re
        res = pfq(HypergeometricParams(num, den), x)
        if res.value.du != 0.0:
            return math.inf
        return abs(res.value.re - _real_partial_sum(num, den, x, res.terms_used))

    def parameter(which):
        def case(_):
            shape = rng.choice([s for s in _FORWARD_SHAPES if s[which] > 0])
            num, den = real_params(shape)
            x = _argument(rng, *shape).re
            vals = num if which == 0 else den
            i = rng.randrange(len(vals))
            b = rng.choice((-1.0, 1.0)) * _u(rng, 0.1, 2.0)
            duals = [Dual(v) for v in vals]
            duals[i] = Dual(vals[i], b)
            P = HypergeometricParams(duals, den) if which == 0 else HypergeometricParams(num, duals)

            def real_f(v):
                moved = list(vals)
                moved[i] = v
                return real_pfq(moved, den, x) if which == 0 else real_pfq(num, moved, x)

            return rel_fd(pfq(P, x).value.du / b, finite_diff(real_f, vals[i]))

        return case

    def argument(_):
        shape = rng.choice(_FORWARD_SHAPES)
        num, den = real_params(shape)
        x = _argument(rng, *shape).re
        du = pfq(HypergeometricParams(num, den), Dual(x, 1.0)).value.du
        return rel_fd(du, finite_diff(lambda v: real_pfq(num, den, v), x))

    def derivative(_):
        shape = rng.choice(_FORWARD_SHAPES)
        num, den = real_params(shape)
        P = HypergeometricParams(num, den)
        x = _argument(rng, *shape).re
        d = pfq_derivative(P, x, 1).re
        return rel_fd(d, finite_diff(lambda v: pfq(P, v).value.re, x))

    return [
        _Tally("zero_dual_collapse", 0.0).run(n, collapse),
        _Tally("numerator_sensitivity", 1e-5).run(n, parameter(0)),
        _Tally("denominator_sensitivity", 1e-5).run(n, parameter(1)),
        _Tally("argument_sensitivity", 1e-6).run(n, argument),
        _Tally("derivative_formula", 1e-6).run(n, derivative),
    ]


_RELATION_SHAPES = {
    Relation.NUMERATOR_PAIR: ((2, 1), (2, 2), (3, 2), (2, 3), (3, 3)),
    Relation.NUMERATOR_DENOMINATOR: ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2)),
    Relation.RAISE_DENOMINATORS_P_LT_Q: ((1, 2), (1, 3), (2, 3)),
    Relation.RAISE_DENOMINATORS_P_EQ_Q: ((1, 1), (2, 2), (3, 3)),
    Relation.RAISE_DENOMINATORS_P_EQ_Q1: ((1, 0), (2, 1), (3, 2)),
    Relation.LOWER_NUMERATOR_P_LE_Q: ((1, 1), (1, 2), (2, 2), (2, 3)),
    Relation.LOWER_NUMERATOR_P_EQ_Q1: ((1, 0), (2, 1), (3, 2)),
}


def _relation_index(rng, relation, shape):
    p, q = shape
    if relation is Relation.NUMERATOR_PAIR:
        return rng.randint(2, p)
    if relation is Relation.NUMERATOR_DENOMINATOR:
        return rng.randint(1, q)
    if relation in (Relation.LOWER_NUMERATOR_P_LE_Q, Relation.LOWER_NUMERATOR_P_EQ_Q1):
        return rng.randint(1, p)
    return None


@_suite("pfq_contiguous")
def _pfq_contiguous(rng, n=200):
    checks = []
    for relation, shapes in _RELATION_SHAPES.items():
        def case(_, relation=relation, shapes=shapes):
            shape = rng.choice(shapes)
            P = _params(rng, shape)
            x = _argument(rng, *shape)
            res = contiguous_residual(relation, P, x, _relation_index(rng, relation, shape))
            return scaled(res, pfq(P, x).value)

        checks.append(_Tally(relation.value, 1e-8).run(n, case))
    return checks


@_suite("theta_ode")
def _theta_ode(rng, n=200):
    def case(_):
        shape = rng.choice(_FORWARD_SHAPES)
        P = _params(rng, shape)
        x = _argument(rng, *shape)
        return scaled(theta_ode_residual(P, x), pfq(P, x).value)

    return [_Tally("theta_ode", 1e-8).run(n, case)]


def _b_clear_of_poles(rng, r, gap=0.1):
    while True:
        b = _dual(rng, 1.2, 4.0)
        m = b.re - r
        if m > 0.0 or abs(m - round(m)) >= gap:
            return b


@_suite("confluent")
def _confluent_suite(rng, n=200):
    checks = []
    for formula in range(1, 7):
        def case(_, formula=formula):
            r = rng.randint(0, 3)
            a = _dual(rng, 0.2, 3.0)
            b = _b_clear_of_poles(rng, r)
            x = _dual(rng, -2.0, 2.0) if formula in (1, 4) else _dual(rng, 0.1, 2.0)
            lhs, rhs = confluent_diff_formula(formula, r, a, b, x)
            return scaled(lhs - rhs, rhs)

        checks.append(_Tally(f"diff_formula_{formula}", 1e-8).run(n, case))
    for relation in range(1, 4):
        def case(_, relation=relation):
            a, b, x = _dual(rng, 0.2, 3.0), _dual(rng, 1.2, 4.0), _dual(rng, -2.0, 2.0)
            res = confluent_contiguous_residual(relation, a, b, x)
            return scaled(res, confluent(a, b, x).value)

        checks.append(_Tally(f"contiguous_{relation}", 1e-8).run(n, case))
    return checks


@_suite("gauss")
def _gauss_suite(rng, n=200):
    checks = []

    def draw():
        return _dual(rng, 0.2, 3.0), _dual(rng, 0.2, 3.0), _dual(rng, 1.2, 4.0)

    for formula in range(1, 5):
        def case(_, formula=formula):
            r = rng.randint(0, 3)
            a1, a2, b = draw()
            if formula == 4:
                b = _b_clear_of_poles(rng, r)
            reach = 0.75 if r < 2 else 0.6
            lo = -reach if formula == 1 else 0.05
            x = _dual(rng, lo, reach)
            lhs, rhs = gauss_diff_formula(formula, r, a1, a2, b, x)
            return scaled(lhs - rhs, rhs)

        checks.append(_Tally(f"diff_formula_{formula}", 1e-8).run(n, case))
    for relation in range(1, 6):
        def case(_, relation=relation):
            a1, a2, b = draw()
            x = _dual(rng, -0.75, 0.75)
            res = gauss_contiguous_residual(relation, a1, a2, b, x)
            return scaled(res, gauss(a1, a2, b, x).value)

        checks.append(_Tally(f"contiguous_{relation}", 1e-8).run(n, case))

    def ode(_):
        a1, a2, b = draw()
        x = _dual(rng, -0.75, 0.75)
        return scaled(gauss_ode_residual(a1, a2, b, x), gauss(a1, a2, b, x).value)

    def symmetry(_):
        a1, a2, b = draw()
        x = _dual(rng, -0.75, 0.75)
        F = gauss(a1, a2, b, x).value
        return scaled(F - gauss(a2, a1, b, x).value, F)

    checks.append(_Tally("ode", 1e-8).run(n, ode))
    checks.append(_Tally("symmetry", 1e-12).run(n, symmetry))
    return checks


@_suite("transforms")
def _transforms(rng, n=200):
    def draw():
        return (_dual(rng, 0.2, 3.0), _dual(rng, 0.2, 3.0), _dual(rng, 1.2, 4.0),
                _dual(rng, -0.45, 0.45))

    def pfaff(_):
        lhs, rhs = pfaff_transform(*draw())
        return scaled(lhs - rhs, lhs)

    def euler(_):
        lhs, rhs = euler_transform(*draw())
        return scaled(lhs - rhs, lhs)

    def composition(_):
        args = draw()
        rhs = euler_transform(*args)[1]
        return scaled(pfaff_pfaff(*args) - rhs, rhs)

    return [
        _Tally("pfaff", 1e-9).run(n, pfaff),
        _Tally("euler", 1e-9).run(n, euler),
        _Tally("pfaff_pfaff_is_euler", 1e-9).run(n, composition),
    ]


def gauss_sum_cases(rng, count=50):
    """(a1, a2, b) triples with Re(b - a1 - a2) >= 0.5, the 4/pi case first."""
    out = [(Dual(0.5), Dual(0.5), Dual(2.0))]
    while len(out) < count:
        a1, a2 = _dual(rng, 0.2, 2.5), _dual(rng, 0.2, 2.5)
        b = a1 + a2 + _dual(rng, 0.5, 3.0)
        out.append((a1, a2, b))
    return out


@_suite("gauss_sum")
def _gauss_sum(rng):
    cases = gauss_sum_cases(rng)

    def case(i):
        a1, a2, b = cases[i]
        return rel(gauss(a1, a2, b, 1.0).value, gauss_sum_at_1(a1, a2, b))

    return [_Tally("boundary_series", 1e-6).run(len(cases), case)]


@_suite("quadrature")
def _quadrature(rng, n=50):
    checks = []

    fixed = [Dual(a, b) for a in (0.5, 1.5, 3.0) for b in (0.0, 1.0)]
    checks.append(_Tally("gamma_fixed", 1e-8).run(
        len(fixed), lambda i: rel(gamma_dual_quadrature(fixed[i]).value, gamma_dual(fixed[i]))))

    def gamma_case(_):
        a = _dual(rng, 0.5, 6.0)
        return rel(gamma_dual_quadrature(a).value, gamma_dual(a))

    def beta_case(_):
        a, c = _dual(rng, 0.2, 5.0), _dual(rng, 0.2, 5.0)
        return rel(beta_dual_quadrature(a, c).value, beta_dual(a, c))

    checks.append(_Tally("gamma_integral", 1e-7).run(n, gamma_case))
    checks.append(_Tally("beta_integral", 1e-7).run(n, beta_case))

    def beta_type(a_lo=0.2, a_hi=3.0):
        while True:
            a, b = _dual(rng, a_lo, a_hi), _dual(rng, 1.2, 4.0)
            if (b - a).re >= 0.3:
                return a, b

    shapes = ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2))
    for form in ("euler_01", "infinite", "scaled"):
        def case(_, form=form):
            shape = rng.choice(shapes)
            a1, b1 = beta_type()
            P = _params(rng, shape)
            P = HypergeometricParams([a1, *P.numerator[1:]], [b1, *P.denominator[1:]])
            x = _argument(rng, *shape)
            tag = ("scaled", _u(rng, 0.3, 3.0)) if form == "scaled" else form
            return rel(pfq_integral_rep(P, x, tag).value, pfq(P, x).value)

        checks.append(_Tally(f"pfq_{form}", 1e-7).run(n, case))

    for form in range(1, 6):
        def case(_, form=form):
            a, b = beta_type()
            x = _dual(rng, 0.1, 2.0) if form == 2 else _dual(rng, -2.0, 2.0)
            return rel(confluent_integral_rep(form, a, b, x).value,
                       confluent(a, b, x).value)

        checks.append(_Tally(f"confluent_form_{form}", 1e-7).run(n, case))

    def euler_case(_):
        a1, b = beta_type()
        a2 = _dual(rng, 0.2, 3.0)
        x = _dual(rng, -0.75, 0.75)
        return rel(gauss_integral_rep(a1, a2, b, x).value,
                   gauss(a1, a2, b, x).value)

    checks.append(_Tally("gauss_euler_integral", 1e-7).run(n, euler_case))
    return checks


@_suite("integral_formulas")
def _integral_formulas(rng, n=50):
    checks = []
    for name in INTEGRAL_FORMULAS:
        def case(_, name=name):
            while True:
                a, b = _dual(rng, 1.3, 3.0), _dual(rng, 1.2, 4.0)
                if abs((1.0 + a - b).re) >= 0.2:
                    break
            x = _dual(rng, 0.1, 2.0)
            _, derivative = confluent_integral_formula(name, a, b, x)
            return rel(derivative, confluent_integrand(name, a, b, x))

        checks.append(_Tally(name, 1e-8).run(n, case))
    return checks


@_suite("elementary")
def _elementary(rng, n=200):
    checks = []
    for identity in ELEMENTARY_IDENTITIES:
        def case(_, identity=identity):
            x = Dual(_u(rng, -0.85, 0.85), rng.choice((0.0, 1.0, -2.0)))
            order = rng.randint(0, 8) if identity == "binomial_n" else None
            series, closed = elementary_identity(identity, x, order)
            return scaled(series - closed, closed)

        checks.append(_Tally(identity, 1e-9).run(n, case))
    return checks


# ---------------------------------------------------------------------------
# driver


def run_suite(name: str, seed: int) -> list[Check]:
    if name not in SUITES:
        raise KeyError(name)
    rng = random.Random(f"{name}:{seed}")
    return [Check(f"{name}.{c.name}", c.cases, c.worst, c.limit) for c in SUITES[name](rng)]


def report(names, seed: int):
    """Run the named suites; returns ``(lines, all_passed)``."""
    lines = []
    ok = True
    for name in names:
        for check in run_suite(name, seed):
            lines.append(format_check(check))
            ok = ok and check.passed
    return lines, ok
