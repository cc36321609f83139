"""Backend selection for the series kernels.

The compiled extension is used when it imports; set ``DUALHYP_PURE_PYTHON=1``
to force the pure-Python twin.
"""

import os

from . import _kernels_py

if os.environ.get("DUALHYP_PURE_PYTHON", "") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

KERNEL_BACKEND = "python" if _impl is _kernels_py else "cython"

series_sum = _impl.series_sum
partial_sums = _impl.partial_sums

__all__ = ["KERNEL_BACKEND", "series_sum", "partial_sums"]
