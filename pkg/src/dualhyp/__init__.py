"""Dual-number gamma, beta and generalized hypergeometric functions.

A :class:`Dual` is x1 + eps*x2 with eps**2 = 0.  Every function here accepts
dual inputs, so the dual channel of a result carries an exact first-order
sensitivity with respect to whichever inputs had nonzero dual parts.
"""

from .beta import beta_dual, beta_dual_quadrature
from .dual import (
    ARCSIN,
    ARCTAN,
    COS,
    COT,
    CSC,
    ELEMENTARY,
    EPS,
    EXP,
    LOG,
    SEC,
    SIN,
    TAN,
    Dual,
    ElementaryFunction,
    antiderivative,
    arithmetic,
    as_dual,
    dual_derivative,
    format_dual,
    lift,
    parse_dual,
    pow_dual,
    pow_real_base,
    power_k,
)
from .errors import *  # noqa: F401,F403
from .gamma import gamma_dual, gamma_dual_quadrature, gamma_limit_approx, pochhammer_dual
from .hypergeometric import (
    ConvergenceClass,
    ConvergenceKind,
    HypergeometricParams,
    Relation,
    SeriesResult,
    classify_convergence,
    contiguous_residual,
    pfq,
    pfq_derivative,
    pfq_integral_rep,
    pfq_weighted,
    product_derivative,
    theta_ode_residual,
)
from .kernels import KERNEL_BACKEND
from .reference import (
    EULER_GAMMA,
    FDConfig,
    QuadratureResult,
    digamma,
    finite_diff,
    gamma_real,
    quad_de,
    trigamma,
)
from .special import *  # noqa: F401,F403

__version__ = "0.1.0"
