"""The DEMATEL pipeline: aggregate, normalize, total relation, threshold,
alpha-cut, prominence/relation scores and the influence digraph."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateMatrix,
    DimensionMismatch,
    Diverged,
    EmptyPanel,
    NonzeroDiagonal,
    OutOfRange,
    Singular,
)
from .matrix import identity, mat_invert, mat_mul, neumann_total_relation
from .model import (
    AnalysisResult,
    CriteriaSet,
    DirectRelationMatrix,
    Edge,
    ExpertResponse,
    NormalizedMatrix,
    ProminenceRecord,
    Strength,
    TotalRelationMatrix,
    validate_expert_response,
)


class NormMode(str, enum.Enum):
    """How the normalization divisor ``s`` is chosen.

    ``ROW_COL_MAX`` (the larger of the max row sum and max column sum) is the
    default because it is the rule that reproduces the published worked
    example; ``ROW_MAX`` uses the max row sum alone.
    """

    ROW_MAX = "row-max"
    ROW_COL_MAX = "row-col-max"


@dataclass(frozen=True)
class PipelineOptions:
    norm_mode: NormMode = NormMode.ROW_COL_MAX
    alpha_override: float | None = None
    strength_bounds: tuple[float, float] | None = None

    def __post_init__(self):
        object.__setattr__(self, "norm_mode", NormMode(self.norm_mode))
        if self.alpha_override is not None and not self.alpha_override >= 0:
            raise ValueError(f"alpha_override must be >= 0, got {self.alpha_override}")
        if self.strength_bounds is not None:
            lo, hi = self.strength_bounds
            if lo > hi:
                raise ValueError(f"strength bounds must be ordered (weak/moderate, moderate/strong), got {self.strength_bounds}")


def aggregate_responses(responses: Sequence[ExpertResponse], cs: CriteriaSet) -> DirectRelationMatrix:
    """Arithmetic mean of the expert score grids."""
    if len(responses) == 0:
        raise EmptyPanel()
    for r in responses:
        if r.scores.shape != (cs.n, cs.n):
            raise DimensionMismatch((cs.n, cs.n), r.scores.shape, what=f"expert {r.expert_id!r}")
    # Integer sum first, one division at the end: each cell is exactly k/P.
    total = np.sum([r.scores for r in responses], axis=0, dtype=np.int64)
    values = total / len(responses)
    np.fill_diagonal(values, 0.0)
    return DirectRelationMatrix(values)


def check_drm(drm: DirectRelationMatrix, cs: CriteriaSet | None = None) -> DirectRelationMatrix:
    v = drm.values
    if v.ndim != 2 or v.shape[0] != v.shape[1] or (cs is not None and v.shape != (cs.n, cs.n)):
        n = cs.n if cs is not None else v.shape[0]
        raise DimensionMismatch((n, n), v.shape, what="direct-relation matrix")
    for i in range(v.shape[0]):
        if v[i, i] != 0:
            raise NonzeroDiagonal(i, float(v[i, i]))
    bad = np.argwhere(~((v >= 0) & (v <= 4)))
    if bad.size:
        i, j = (int(k) for k in bad[0])
        raise OutOfRange(i, j, float(v[i, j]))
    return drm


def normalization_divisor(values: np.ndarray, mode: NormMode = NormMode.ROW_COL_MAX) -> float:
    s = float(values.sum(axis=1).max())
    if NormMode(mode) is NormMode.ROW_COL_MAX:
        s = max(s, float(values.sum(axis=0).max()))
    return s


def normalize_drm(drm: DirectRelationMatrix, mode: NormMode = NormMode.ROW_COL_MAX) -> NormalizedMatrix:
    """Scale every entry by one global divisor ``s`` (see :class:`NormMode`)."""
    s = normalization_divisor(drm.values, mode)
    if not s > 0:
        raise DegenerateMatrix()
    return NormalizedMatrix(drm.values / s, s)


def compute_trm(nrm: NormalizedMatrix) -> TotalRelationMatrix:
    """Total relation ``T = X (I - X)^-1``.

    Convergence of the implied power series is checked first; a spectral
    radius of 1 or more means direct plus indirect influence is unbounded and
    the inverse, even if it exists, is meaningless.
    """
    x = nrm.values
    n = x.shape[0]
    rho = float(np.max(np.abs(np.linalg.eigvals(x)))) if n else 0.0
    if not rho < 1.0:
        raise ConvergenceFailure(f"spectral radius of the normalized matrix is {rho:.6g} >= 1")
    try:
        inv = mat_invert(identity(n) - x)
    except (Singular, Diverged) as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return TotalRelationMatrix(mat_mul(x, inv))


def compute_trm_series(nrm: NormalizedMatrix, tol: float = 1e-14) -> TotalRelationMatrix:
    """Same quantity as :func:`compute_trm`, via the power series oracle."""
    try:
        return TotalRelationMatrix(neumann_total_relation(nrm.values, tol))
    except Diverged as exc:
        raise ConvergenceFailure(str(exc)) from exc


def compute_threshold(trm: TotalRelationMatrix) -> float:
    """Grand mean of all n^2 entries."""
    t = trm.values
    return float(t.sum() / t.size) if t.size else 0.0


def compute_prominence(trm: TotalRelationMatrix, cs: CriteriaSet) -> tuple[ProminenceRecord, ...]:
    t = trm.values
    if t.shape != (cs.n, cs.n):
        raise DimensionMismatch((cs.n, cs.n), t.shape, what="total-relation matrix")
    d = t.sum(axis=1)
    r = t.sum(axis=0)
    return tuple(ProminenceRecord.from_sums(c, float(d[i]), float(r[i])) for i, c in enumerate(cs))


def apply_alpha_cut(trm: TotalRelationMatrix | np.ndarray, alpha: float) -> np.ndarray:
    """Zero every entry strictly below ``alpha``; keep the rest as-is."""
    t = trm.values if isinstance(trm, TotalRelationMatrix) else np.asarray(trm, dtype=np.float64)
    return np.where(t >= alpha, t, 0.0)


def tertile_bounds(weights: Sequence[float]) -> tuple[float, float]:
    w = np.asarray(weights, dtype=np.float64)
    lo, hi = np.quantile(w, [1 / 3, 2 / 3])
    return float(lo), float(hi)


def classify_strength(weight: float, bounds: tuple[float, float]) -> Strength:
    lo, hi = bounds
    if weight >= hi:
        return Strength.STRONG
    if weight >= lo:
        return Strength.MODERATE
    return Strength.WEAK


def build_digraph(
    alpha_cut: np.ndarray,
    cs: CriteriaSet,
    strength_bounds: tuple[float, float] | None = None,
) -> tuple[Edge, ...]:
    """One edge per nonzero cell, in row-major order.

    Without explicit ``strength_bounds`` the classes split at the tertiles of
    the surviving weights.  A weight sitting exactly on a bound takes the
    stronger class.
    """
    cut = np.asarray(alpha_cut, dtype=np.float64)
    if cut.shape != (cs.n, cs.n):
        raise DimensionMismatch((cs.n, cs.n), cut.shape, what="alpha-cut matrix")
    cells = [(i, j, float(cut[i, j])) for i, j in zip(*np.nonzero(cut))]
    if not cells:
        return ()
    bounds = strength_bounds if strength_bounds is not None else tertile_bounds([w for _, _, w in cells])
    return tuple(Edge(cs[i], cs[j], w, classify_strength(w, bounds)) for i, j, w in cells)


def run_pipeline(
    data: Sequence[ExpertResponse] | DirectRelationMatrix,
    cs: CriteriaSet,
    options: PipelineOptions | None = None,
) -> AnalysisResult:
    """Run the whole analysis from an expert panel or a pre-aggregated matrix."""
    options = options or PipelineOptions()
    if isinstance(data, DirectRelationMatrix):
        drm = check_drm(data, cs)
    else:
        for r in data:
            validate_expert_response(r, cs)
        drm = aggregate_responses(data, cs)
    nrm = normalize_drm(drm, options.norm_mode)
    trm = compute_trm(nrm)
    alpha = compute_threshold(trm)
    cut_at = alpha if options.alpha_override is None else options.alpha_override
    cut = apply_alpha_cut(trm, cut_at)
    records = compute_prominence(trm, cs)
    edges = build_digraph(cut, cs, options.strength_bounds)
    return AnalysisResult(cs, drm, nrm, trm, alpha, cut, records, edges, cut_at)
