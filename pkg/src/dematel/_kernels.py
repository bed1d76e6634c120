"""Inner-loop kernels, in explicit-loop and vectorized-numpy forms.

The ``*_loops`` functions are plain Python written in the subset numba
compiles; ``*_jit`` are their compiled twins.  Public modules import the
names without suffix, which resolve according to :mod:`dematel._backend`.

Kernels report failure through status values rather than exceptions so the
compiled and uncompiled paths behave identically.
"""

from __future__ import annotations

import numpy as np

from ._backend import USE_NUMBA, jit


# -- Gauss-Jordan inversion --------------------------------------------------
# Returns (inverse, failed_column); failed_column == -1 on success.

def gauss_jordan_loops(a, pivot_tol):
    n = a.shape[0]
    m = a.astype(np.float64).copy()
    inv = np.eye(n)
    for k in range(n):
        p = k
        best = abs(m[k, k])
        for i in range(k + 1, n):
            v = abs(m[i, k])
            if v > best:
                best = v
                p = i
        if best < pivot_tol:
            return inv, k
        if p != k:
            for j in range(n):
                tmp = m[k, j]
                m[k, j] = m[p, j]
                m[p, j] = tmp
                tmp = inv[k, j]
                inv[k, j] = inv[p, j]
                inv[p, j] = tmp
        piv = m[k, k]
        for j in range(n):
            m[k, j] /= piv
            inv[k, j] /= piv
        for i in range(n):
            if i == k:
                continue
            f = m[i, k]
            if f != 0.0:
                for j in range(n):
                    m[i, j] -= f * m[k, j]
                    inv[i, j] -= f * inv[k, j]
    return inv, -1


def gauss_jordan_numpy(a, pivot_tol):
    n = a.shape[0]
    aug = np.hstack([np.asarray(a, dtype=np.float64), np.eye(n)])
    for k in range(n):
        p = k + int(np.argmax(np.abs(aug[k:, k])))
        if abs(aug[p, k]) < pivot_tol:
            return aug[:, n:].copy(), k
        if p != k:
            aug[[k, p]] = aug[[p, k]]
        aug[k] /= aug[k, k]
        f = aug[:, k].copy()
        f[k] = 0.0
        aug -= np.outer(f, aug[k])
    return aug[:, n:].copy(), -1


# -- Neumann series  sum_{k>=1} X^k -------------------------------------------
# Returns (partial_sum, iterations, last_term_norm, status);
# status 0 converged, 1 hit max_iter, 2 non-finite term.

def neumann_loops(x, tol, max_iter):
    n = x.shape[0]
    total = x.copy()
    term = x.copy()
    norm = 0.0
    for i in range(n):
        for j in range(n):
            norm = max(norm, abs(term[i, j]))
    if norm < tol:
        return total, 0, norm, 0
    nxt = np.empty_like(x)
    for it in range(1, max_iter + 1):
        for i in range(n):
            for j in range(n):
                acc = 0.0
                for k in range(n):
                    acc += term[i, k] * x[k, j]
                nxt[i, j] = acc
        norm = 0.0
        for i in range(n):
            for j in range(n):
                v = nxt[i, j]
                total[i, j] += v
                term[i, j] = v
                norm = max(norm, abs(v))
        if not np.isfinite(norm):
            return total, it, norm, 2
        if norm < tol:
            return total, it, norm, 0
    return total, max_iter, norm, 1


def neumann_numpy(x, tol, max_iter):
    total = x.copy()
    term = x.copy()
    norm = float(np.max(np.abs(term))) if term.size else 0.0
    if norm < tol:
        return total, 0, norm, 0
    for it in range(1, max_iter + 1):
        term = term @ x
        total += term
        norm = float(np.max(np.abs(term)))
        if not np.isfinite(norm):
            return total, it, norm, 2
        if norm < tol:
            return total, it, norm, 0
    return total, max_iter, norm, 1


# -- Score perturbation --------------------------------------------------------
# scores: (P, n, n) int64; u_flip, u_dir: (P, n, n) uniforms in [0, 1).

def perturb_loops(scores, u_flip, u_dir, p, magnitude, lo, hi):
    out = scores.copy()
    P, n, _ = scores.shape
    for e in range(P):
        for i in range(n):
            for j in range(n):
                if i == j or not u_flip[e, i, j] < p:
                    continue
                v = scores[e, i, j] + (magnitude if u_dir[e, i, j] < 0.5 else -magnitude)
                out[e, i, j] = min(max(v, lo), hi)
    return out


def perturb_numpy(scores, u_flip, u_dir, p, magnitude, lo, hi):
    n = scores.shape[-1]
    step = np.where(u_dir < 0.5, magnitude, -magnitude)
    flip = (u_flip < p) & ~np.eye(n, dtype=bool)
    return np.where(flip, np.clip(scores + step, lo, hi), scores).astype(np.int64)


gauss_jordan_jit = jit(gauss_jordan_loops)
neumann_jit = jit(neumann_loops)
perturb_jit = jit(perturb_loops)

if USE_NUMBA:
    gauss_jordan = gauss_jordan_jit
    neumann = neumann_jit
    perturb = perturb_jit
else:
    gauss_jordan = gauss_jordan_numpy
    neumann = neumann_numpy
    perturb = perturb_numpy
