"""DEMATEL causal analysis: from expert influence surveys to cause/effect
groups, an influence digraph and prominence-relation scatter data."""

from ._backend import BACKEND
from .engine import (
    NormMode,
    PipelineOptions,
    aggregate_responses,
    apply_alpha_cut,
    build_digraph,
    compute_prominence,
    compute_threshold,
    compute_trm,
    normalize_drm,
    run_pipeline,
)
from .errors import *  # noqa: F401,F403
from .matrix import mat_invert, mat_mul, neumann_total_relation
from .model import (
    AnalysisResult,
    CriteriaSet,
    Criterion,
    DirectRelationMatrix,
    Edge,
    ExpertResponse,
    Group,
    NormalizedMatrix,
    ProminenceRecord,
    Strength,
    TotalRelationMatrix,
    validate_expert_response,
)
from .sensitivity import PerturbationSpec, StabilityReport, monte_carlo_stability, perturb_response

__version__ = "0.1.0"
