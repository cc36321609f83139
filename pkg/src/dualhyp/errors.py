"""Exception hierarchy shared by every module of the package."""


class DualHypError(Exception):
    """Base class for all errors raised by dualhyp."""


class DomainError(DualHypError, ValueError):
    """An argument lies outside the domain of the requested function."""


class NonPositiveBase(DomainError):
    """A real power with non-integer exponent was requested of a base <= 0."""


class DivisionByPureDual(DualHypError, ZeroDivisionError):
    """Division by a dual number whose real part is zero (a zero divisor)."""


class PoleError(DomainError):
    """Argument at (or within threshold of) a pole.

    ``pole`` is the nearest pole location, ``argument`` optionally names which
    argument of a multi-argument function hit it.
    """

    def __init__(self, message, pole=None, argument=None):
        super().__init__(message)
        self.pole = pole
        self.argument = argument


class ZeroFactor(DomainError):
    """A reciprocal Pochhammer product contains a factor with zero real part."""


class DegenerateParameters(DomainError):
    """Parameters coincide where a formula needs them distinct or excluded."""


class DivergentInput(DomainError):
    """The requested series diverges at the given argument."""


class InapplicableRelation(DualHypError, ValueError):
    """A relation was requested for a (p, q) shape or index it does not cover."""


class ParseError(DualHypError, ValueError):
    """Malformed dual literal; ``offset`` is the byte offset of the failure."""

    def __init__(self, message, text, offset):
        super().__init__(f"{message} at offset {offset} in {text!r}")
        self.text = text
        self.offset = offset


class NonFiniteResult(DualHypError, ArithmeticError):
    """An operation would have produced an infinite or NaN channel."""


class Overflow(NonFiniteResult, OverflowError):
    """Magnitude exceeds the representable floating-point range."""


class NoConvergence(DualHypError, ArithmeticError):
    """An iterative method exhausted its budget before meeting its tolerance.

    ``partial`` holds the best estimate reached, when one exists.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class EvaluationError(DualHypError, RuntimeError):
    """A user callback raised while being sampled by an oracle."""
