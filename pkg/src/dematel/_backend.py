"""Kernel backend selection.

Set ``DEMATEL_NUMBA=1`` before import to run the loop kernels under numba's
``njit``.  The default is the vectorized numpy path: matrices here are small,
so JIT compile time usually outweighs the speedup (see benchmarks/).
"""

from __future__ import annotations

import os
import warnings

_TRUTHY = {"1", "true", "yes", "on"}

USE_NUMBA = os.environ.get("DEMATEL_NUMBA", "").strip().lower() in _TRUTHY
HAVE_NUMBA = False

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    _njit = None
    if USE_NUMBA:
        warnings.warn("DEMATEL_NUMBA is set but numba is not installed; using numpy kernels")
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"


def jit(func):
    """Compile ``func`` with numba if available, else return it untouched.

    Compilation is lazy, so decorating costs nothing until first call.
    """
    if _njit is None:
        return func
    return _njit(cache=False)(func)
