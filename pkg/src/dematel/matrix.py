"""Dense real-matrix primitives.

A "dense matrix" here is simply a 2-D float64 numpy array.  Inversion is
Gauss-Jordan elimination with partial pivoting; :func:`neumann_total_relation`
is an independent power-series route to ``X (I - X)^-1`` used as a test
oracle.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, Diverged, Singular

PIVOT_TOL = 1e-12
NEUMANN_MAX_ITER = 10_000


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatch("2-D", m.shape)
    return m


def _square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch((m.shape[0], m.shape[0]), m.shape, what="square matrix")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.float64)


def mat_mul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch((a.shape[1], "*"), b.shape, what="right operand")
    return a @ b


def mat_invert(a, pivot_tol: float = PIVOT_TOL) -> np.ndarray:
    """Invert a square matrix by Gauss-Jordan elimination with partial pivoting.

    Raises :class:`Singular` naming the elimination column whose best
    available pivot has magnitude below ``pivot_tol``.
    """
    m = np.ascontiguousarray(_square(a))
    inv, bad_col = _kernels.gauss_jordan(m, pivot_tol)
    if bad_col >= 0:
        raise Singular(int(bad_col))
    return inv


def neumann_total_relation(x, tol: float = 1e-14, max_iter: int = NEUMANN_MAX_ITER) -> np.ndarray:
    """Sum ``X + X^2 + X^3 + ...`` until the next term's max-norm drops below ``tol``.

    Converges iff the spectral radius of ``X`` is below 1; otherwise raises
    :class:`Diverged` after ``max_iter`` terms (or as soon as a term overflows).
    """
    m = np.ascontiguousarray(_square(x))
    with np.errstate(over="ignore", invalid="ignore"):
        total, iters, norm, status = _kernels.neumann(m, tol, max_iter)
    if status != 0:
        raise Diverged(int(iters), float(norm))
    return total
