"""Dual numbers x1 + eps*x2 with eps**2 = 0, and the calculus built on them.

Every quantity in the package is a :class:`Dual`.  The real channel ``re``
carries the value and the dual channel ``du`` carries an exact first-order
sensitivity: products of two dual channels are dropped, never rounded.

``abs(Dual)`` follows the convention |x1 + eps*x2| = |x1|.  That is a
seminorm (it ignores ``du``), which matters when it is used in convergence
tests.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from numbers import Real

from .errors import (
    DivisionByPureDual,
    DomainError,
    NonFiniteResult,
    NonPositiveBase,
    Overflow,
    ParseError,
)

__all__ = [
    "Dual",
    "EPS",
    "as_dual",
    "arithmetic",
    "pow_real_base",
    "pow_dual",
    "ElementaryFunction",
    "EXP", "SIN", "COS", "TAN", "COT", "SEC", "CSC", "LOG", "ARCSIN", "ARCTAN",
    "power_k",
    "ELEMENTARY",
    "lift",
    "dual_derivative",
    "antiderivative",
    "exp", "log", "sin", "cos", "sqrt",
    "parse_dual",
    "format_dual",
]

_isfinite = math.isfinite


class Dual:
    """Immutable dual number ``re + eps*du``."""

    __slots__ = ("re", "du")

    def __init__(self, re: float = 0.0, du: float = 0.0):
        re = float(re)
        du = float(du)
        if not (_isfinite(re) and _isfinite(du)):
            raise NonFiniteResult(f"non-finite dual channels ({re!r}, {du!r})")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "du", du)

    def __setattr__(self, name, value):
        raise AttributeError("Dual is immutable")

    def __reduce__(self):
        return (Dual, (self.re, self.du))

    def __repr__(self) -> str:
        return f"Dual({self.re!r}, {self.du!r})"

    def __str__(self) -> str:
        return format_dual(self)

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.re == other.re and self.du == other.du
        if isinstance(other, Real):
            return self.du == 0.0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.du == 0.0:
            return hash(self.re)
        return hash((self.re, self.du))

    def __bool__(self):
        return self.re != 0.0 or self.du != 0.0

    def __abs__(self) -> float:
        return abs(self.re)

    def __neg__(self) -> Dual:
        return Dual(-self.re, -self.du)

    def __pos__(self) -> Dual:
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dual(self.re + other.re, self.du + other.du)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dual(self.re - other.re, self.du - other.du)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dual(other.re - self.re, other.du - self.du)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dual(self.re * other.re, self.re * other.du + self.du * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _div(self, other)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _div(other, self)

    def __pow__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return pow_dual(self, other)

    def __rpow__(self, other):
        if isinstance(other, Real):
            return pow_real_base(float(other), self)
        return NotImplemented

    def inverse(self) -> Dual:
        """1/x = 1/x1 - eps*x2/x1**2."""
        return _div(ONE, self)

    @property
    def is_real(self) -> bool:
        return self.du == 0.0


ONE = Dual(1.0, 0.0)
ZERO = Dual(0.0, 0.0)
EPS = Dual(0.0, 1.0)


def _coerce(value):
    if isinstance(value, Dual):
        return value
    if isinstance(value, Real) and not isinstance(value, bool):
        return Dual(value, 0.0)
    return NotImplemented


def as_dual(value) -> Dual:
    """Coerce a real number, a ``(re, du)`` pair or a Dual into a Dual."""
    if isinstance(value, Dual):
        return value
    if isinstance(value, tuple) and len(value) == 2:
        return Dual(value[0], value[1])
    if isinstance(value, str):
        return parse_dual(value)
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a dual number")
    return out


def _div(x: Dual, y: Dual) -> Dual:
    if y.re == 0.0:
        raise DivisionByPureDual(f"division by {y!r}, whose real part is zero")
    return Dual(x.re / y.re, (x.du * y.re - x.re * y.du) / (y.re * y.re))


def arithmetic(x, y, op: str) -> Dual:
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two dual numbers."""
    x = as_dual(x)
    y = as_dual(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return _div(x, y)
    raise ValueError(f"unknown arithmetic op {op!r}")


def _real_pow(base: float, exponent: float) -> float:
    try:
        return base ** exponent
    except OverflowError as exc:
        raise Overflow(f"{base!r} ** {exponent!r} overflows") from exc


def pow_real_base(a: float, b) -> Dual:
    """a**b for real a > 0: a**b1 * (1 + eps*b2*log a)."""
    b = as_dual(b)
    a = float(a)
    if not a > 0.0:
        raise NonPositiveBase(f"real base must be positive, got {a!r}")
    value = _real_pow(a, b.re)
    return Dual(value, value * b.du * math.log(a))


def _is_integer_exponent(b: Dual) -> bool:
    return b.du == 0.0 and b.re == math.floor(b.re) and abs(b.re) < 2.0 ** 53


def _int_pow(a: Dual, k: int) -> Dual:
    if k < 0:
        a = _div(ONE, a)
        k = -k
    result = ONE
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def pow_dual(a, b) -> Dual:
    """a**b for dual a and b.

    Integer exponents with zero dual part use exact repeated multiplication
    (any base, negative powers need ``a.re != 0``).  Everything else needs
    ``a.re > 0`` and uses a1**b1 * (1 + eps*(a2*b1/a1 + b2*log a1)).
    """
    a = as_dual(a)
    b = as_dual(b)
    if _is_integer_exponent(b):
        return _int_pow(a, int(b.re))
    if not a.re > 0.0:
        raise NonPositiveBase(
            f"base {a!r} must have positive real part for exponent {b!r}"
        )
    value = _real_pow(a.re, b.re)
    return Dual(value, value * (a.du * b.re / a.re + b.du * math.log(a.re)))


# ---------------------------------------------------------------------------
# Lifted elementary functions

_SINGULAR_PROXIMITY = 1e-8


@dataclass(frozen=True)
class ElementaryFunction:
    """Identifier of a liftable elementary function; ``k`` only for powers."""

    tag: str
    k: int | None = None

    def __post_init__(self):
        if self.tag not in _TABLE:
            raise ValueError(f"unknown elementary function {self.tag!r}")
        if (self.tag == "power_k") != (self.k is not None):
            raise ValueError("power_k needs an integer k; other tags take none")

    def __str__(self):
        return f"power_k({self.k})" if self.tag == "power_k" else self.tag


def _distance_to_lattice(x: float, offset: float) -> float:
    # distance from x to the nearest point of offset + n*pi
    n = round((x - offset) / math.pi)
    return abs(x - offset - n * math.pi)


def _check_cos_nonzero(x):
    if _distance_to_lattice(x, math.pi / 2) < _SINGULAR_PROXIMITY:
        raise DomainError(f"x1={x!r} is within 1e-8 of an odd multiple of pi/2")


def _check_sin_nonzero(x):
    if _distance_to_lattice(x, 0.0) < _SINGULAR_PROXIMITY:
        raise DomainError(f"x1={x!r} is within 1e-8 of a multiple of pi")


def _check_log(x):
    if not x > 0.0:
        raise DomainError(f"log needs x1 > 0, got {x!r}")


def _check_arcsin(x):
    if not abs(x) < 1.0:
        raise DomainError(f"arcsin needs |x1| < 1, got {x!r}")


def _no_check(x):
    pass


def _sec(x):
    return 1.0 / math.cos(x)


def _csc(x):
    return 1.0 / math.sin(x)


def _cot(x):
    return math.cos(x) / math.sin(x)


# tag -> (f, f', f'', domain check)
_TABLE = {
    "exp": (math.exp, math.exp, math.exp, _no_check),
    "sin": (math.sin, math.cos, lambda x: -math.sin(x), _no_check),
    "cos": (math.cos, lambda x: -math.sin(x), lambda x: -math.cos(x), _no_check),
    "tan": (
        math.tan,
        lambda x: _sec(x) ** 2,
        lambda x: 2.0 * _sec(x) ** 2 * math.tan(x),
        _check_cos_nonzero,
    ),
    "cot": (
        _cot,
        lambda x: -_csc(x) ** 2,
        lambda x: 2.0 * _csc(x) ** 2 * _cot(x),
        _check_sin_nonzero,
    ),
    "sec": (
        _sec,
        lambda x: _sec(x) * math.tan(x),
        lambda x: _sec(x) * (math.tan(x) ** 2 + _sec(x) ** 2),
        _check_cos_nonzero,
    ),
    "csc": (
        _csc,
        lambda x: -_csc(x) * _cot(x),
        lambda x: _csc(x) * (_cot(x) ** 2 + _csc(x) ** 2),
        _check_sin_nonzero,
    ),
    "log": (math.log, lambda x: 1.0 / x, lambda x: -1.0 / (x * x), _check_log),
    "arcsin": (
        math.asin,
        lambda x: 1.0 / math.sqrt(1.0 - x * x),
        lambda x: x / (1.0 - x * x) ** 1.5,
        _check_arcsin,
    ),
    "arctan": (
        math.atan,
        lambda x: 1.0 / (1.0 + x * x),
        lambda x: -2.0 * x / (1.0 + x * x) ** 2,
        _no_check,
    ),
    "power_k": None,
}


def power_k(k: int) -> ElementaryFunction:
    return ElementaryFunction("power_k", int(k))


EXP = ElementaryFunction("exp")
SIN = ElementaryFunction("sin")
COS = ElementaryFunction("cos")
TAN = ElementaryFunction("tan")
COT = ElementaryFunction("cot")
SEC = ElementaryFunction("sec")
CSC = ElementaryFunction("csc")
LOG = ElementaryFunction("log")
ARCSIN = ElementaryFunction("arcsin")
ARCTAN = ElementaryFunction("arctan")

ELEMENTARY = {f.tag: f for f in (EXP, SIN, COS, TAN, COT, SEC, CSC, LOG, ARCSIN, ARCTAN)}


def _power_table(k: int):
    def f(x):
        return x ** k

    def f1(x):
        return k * x ** (k - 1) if k != 0 else 0.0

    def f2(x):
        return k * (k - 1) * x ** (k - 2) if k not in (0, 1) else 0.0

    def check(x):
        if k < 0 and x == 0.0:
            raise DomainError(f"x**{k} needs x1 != 0")

    return f, f1, f2, check


def _entry(f: ElementaryFunction):
    if isinstance(f, str):
        f = ELEMENTARY[f]
    if f.tag == "power_k":
        return _power_table(f.k)
    return _TABLE[f.tag]


def real_functions(f: ElementaryFunction):
    """The real ``(f, f', f'')`` triple behind an elementary function id."""
    return _entry(f)[:3]


def _evaluate(fn, x: float) -> float:
    try:
        value = fn(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"real evaluation failed at {x!r}: {exc}") from exc
    except OverflowError as exc:
        raise Overflow(f"real evaluation overflowed at {x!r}") from exc
    return value


def lift(f: ElementaryFunction, x) -> Dual:
    """f(x1 + eps*x2) = f(x1) + eps*x2*f'(x1)."""
    x = as_dual(x)
    f0, f1, _, check = _entry(f)
    check(x.re)
    return Dual(_evaluate(f0, x.re), x.du * _evaluate(f1, x.re))


def dual_derivative(f: ElementaryFunction, x) -> Dual:
    """d/dx f at dual x: f'(x1) + eps*x2*f''(x1)."""
    x = as_dual(x)
    _, f1, f2, check = _entry(f)
    check(x.re)
    return Dual(_evaluate(f1, x.re), x.du * _evaluate(f2, x.re))


def exp(x) -> Dual:
    return lift(EXP, x)


def log(x) -> Dual:
    return lift(LOG, x)


def sin(x) -> Dual:
    return lift(SIN, x)


def cos(x) -> Dual:
    return lift(COS, x)


def sqrt(x) -> Dual:
    return pow_dual(x, 0.5)


def _positive_log(x: Dual, what: str) -> Dual:
    if not x.re > 0.0:
        raise DomainError(f"antiderivative {what} needs a positive log argument")
    return log(x)


def antiderivative(f: ElementaryFunction, x) -> Dual:
    """Dual antiderivative of f evaluated at x, integration constant 0.

    The result is F(x1) + eps*x2*f(x1) for the tabulated F with F' = f.
    """
    x = as_dual(x)
    if isinstance(f, str):
        f = ELEMENTARY[f]
    tag = f.tag
    if tag == "power_k":
        k = f.k
        if k == -1:
            if x.re == 0.0:
                raise DomainError("antiderivative of 1/x needs x1 != 0")
            return log(x) if x.re > 0.0 else log(-x)
        return pow_dual(x, k + 1) / (k + 1)
    if tag == "exp":
        return exp(x)
    if tag == "sin":
        return -cos(x)
    if tag == "cos":
        return sin(x)
    if tag == "tan":
        return _positive_log(lift(SEC, x), "of tan (log sec)")
    if tag == "cot":
        return -_positive_log(lift(CSC, x), "of cot (log csc)")
    if tag == "sec":
        return _positive_log(lift(SEC, x) + lift(TAN, x), "of sec")
    if tag == "csc":
        return _positive_log(lift(CSC, x) - lift(COT, x), "of csc")
    if tag == "log":
        return x * log(x) - x
    if tag == "arcsin":
        return x * lift(ARCSIN, x) + sqrt(1.0 - x * x)
    if tag == "arctan":
        return x * lift(ARCTAN, x) - 0.5 * log(1.0 + x * x)
    raise ValueError(f"no antiderivative for {f}")


# ---------------------------------------------------------------------------
# Literal grammar:  real ( sign real "eps" )?  |  sign? real "eps"

_REAL = _re.compile(r"[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")


def _scan_real(text: str, pos: int):
    m = _REAL.match(text, pos)
    if m is None:
        raise ParseError("expected a decimal number", text, pos)
    return float(m.group()), m.end()


def parse_dual(text: str) -> Dual:
    """Parse ``"1.5+2eps"``, ``"-3"``, ``"-0.5eps"`` and the like."""
    first, pos = _scan_real(text, 0)
    if pos == len(text):
        return Dual(first, 0.0)
    if text.startswith("eps", pos):
        if pos + 3 != len(text):
            raise ParseError("trailing characters", text, pos + 3)
        return Dual(0.0, first)
    if text[pos] not in "+-":
        raise ParseError("expected '+', '-' or 'eps'", text, pos)
    sign = -1.0 if text[pos] == "-" else 1.0
    second, end = _scan_real(text, pos + 1)
    if not text.startswith("eps", end):
        raise ParseError("expected 'eps'", text, end)
    if end + 3 != len(text):
        raise ParseError("trailing characters", text, end + 3)
    return Dual(first, sign * second)


def format_dual(x) -> str:
    """Shortest round-trip text: ``<re>`` or ``<re>+<du>eps``."""
    x = as_dual(x)
    if x.du == 0.0:
        return repr(x.re)
    du = repr(x.du)
    return f"{x.re!r}{du if du.startswith('-') else '+' + du}eps"
