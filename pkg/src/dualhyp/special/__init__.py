"""Confluent (1F1) and Gauss (2F1) special cases."""

from .confluent import *  # noqa: F401,F403
from .confluent import __all__ as _confluent_all
from .gauss import *  # noqa: F401,F403
from .gauss import __all__ as _gauss_all

__all__ = list(_confluent_all) + list(_gauss_all)
