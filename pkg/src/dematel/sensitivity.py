"""Monte-Carlo robustness of the cause/effect partition.

Each trial nudges expert scores at random and reruns the analysis.  Random
draws come from a Philox stream whose key is derived from ``(seed,
expert_id)`` and whose counter starts at ``trial_index``; draws are laid out by criterion *code* (sorted), not position, so the draw a
cell receives depends only on (seed, trial, expert, from-code, to-code).
That makes results independent of execution order, thread count and the
order criteria are listed in.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .engine import PipelineOptions, compute_trm, normalize_drm
from .errors import AllTrialsDegenerate, DematelError, EmptyPanel
from .model import SCALE_MAX, SCALE_MIN, CriteriaSet, DirectRelationMatrix, ExpertResponse, validate_expert_response

_U64 = (1 << 64) - 1


@dataclass(frozen=True)
class PerturbationSpec:
    flip_probability: float
    magnitude: int = 1
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if not 0.0 <= self.flip_probability <= 1.0:
            raise ValueError(f"flip_probability must be in [0, 1], got {self.flip_probability}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.magnitude < 0:
            raise ValueError(f"magnitude must be >= 0, got {self.magnitude}")


@dataclass(frozen=True)
class StabilityReport:
    criteria: CriteriaSet
    cause_probability: tuple[float, ...]
    trials_run: int
    degenerate_trials: int

    @property
    def successful_trials(self) -> int:
        return self.trials_run - self.degenerate_trials

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.criteria.codes, self.cause_probability))


@lru_cache(maxsize=4096)
def _philox_key(seed: int, expert_id: str) -> int:
    h = hashlib.blake2b(digest_size=16)
    h.update((seed & _U64).to_bytes(8, "little"))
    h.update(str(expert_id).encode("utf-8"))
    return int.from_bytes(h.digest(), "little")


def code_rank(codes: Sequence[str]) -> np.ndarray:
    """Position -> rank of the code in sorted order."""
    return np.argsort(np.argsort(np.array(codes, dtype=object), kind="stable"), kind="stable")


def cell_uniforms(seed: int, trial_index: int, expert_id: str, rank: np.ndarray) -> np.ndarray:
    """Two (n, n) uniform grids, flip decision and direction, indexed by position."""
    n = len(rank)
    # Trial index sits in the second counter word; a trial consumes far
    # fewer than 2**64 blocks, so trial streams never overlap.
    bitgen = np.random.Philox(key=_philox_key(seed, expert_id), counter=[0, trial_index, 0, 0])
    u = np.random.Generator(bitgen).random((2, n, n))
    return u[:, rank[:, None], rank[None, :]]


def _perturb_stack(scores, ids: Sequence[str], rank: np.ndarray, spec: PerturbationSpec, trial_index: int) -> np.ndarray:
    if spec.flip_probability == 0.0:
        return scores.copy()
    u = np.stack([cell_uniforms(spec.seed, trial_index, e, rank) for e in ids])
    return _kernels.perturb(
        np.ascontiguousarray(scores, dtype=np.int64),
        np.ascontiguousarray(u[:, 0]),
        np.ascontiguousarray(u[:, 1]),
        float(spec.flip_probability),
        int(spec.magnitude),
        SCALE_MIN,
        SCALE_MAX,
    )


def perturb_response(
    resp: ExpertResponse,
    spec: PerturbationSpec,
    trial_index: int,
    cs: CriteriaSet | None = None,
) -> ExpertResponse:
    """Move each off-diagonal score by +/- magnitude with probability
    ``flip_probability`` (direction a fair coin), clamped to the 0-4 scale.

    ``cs`` ties each cell's random draw to its criterion codes; without it
    positions are used as codes.
    """
    n = resp.scores.shape[0]
    rank = code_rank(cs.codes) if cs is not None else np.arange(n)
    out = _perturb_stack(resp.scores[None], [resp.expert_id], rank, spec, trial_index)
    return ExpertResponse(resp.expert_id, out[0])


def _trial_cause_mask(scores: np.ndarray, options: PipelineOptions) -> np.ndarray:
    drm = DirectRelationMatrix(scores.sum(axis=0) / scores.shape[0])
    t = compute_trm(normalize_drm(drm, options.norm_mode)).values
    return ~((t.sum(axis=1) - t.sum(axis=0)) < 0)


def monte_carlo_stability(
    responses: Sequence[ExpertResponse],
    cs: CriteriaSet,
    spec: PerturbationSpec,
    options: PipelineOptions | None = None,
    workers: int = 1,
) -> StabilityReport:
    """Fraction of successful trials in which each criterion lands in the
    cause group.

    Trials whose perturbed panel cannot be analysed (all-zero matrix, no
    convergent total relation) are counted in ``degenerate_trials`` and left
    out of the denominator.  Output is identical for any ``workers``.
    """
    if not responses:
        raise EmptyPanel()
    for r in responses:
        validate_expert_response(r, cs)
    options = options or PipelineOptions()
    ids = [r.expert_id for r in responses]
    base = np.stack([r.scores for r in responses]).astype(np.int64)
    rank = code_rank(cs.codes)

    # Small panels repeat the same perturbed outcome often; the result is a
    # pure function of the scores, so memoizing cannot change the report.
    seen: dict[bytes, np.ndarray | None] = {}

    def one(trial_index):
        scores = _perturb_stack(base, ids, rank, spec, trial_index)
        key = scores.tobytes()
        if key in seen:
            return seen[key]
        try:
            mask = _trial_cause_mask(scores, options)
        except DematelError:
            mask = None
        seen[key] = mask
        return mask

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            masks = list(pool.map(one, range(spec.trials)))
    else:
        masks = [one(t) for t in range(spec.trials)]

    counts = np.zeros(cs.n, dtype=np.int64)
    ok = 0
    for m in masks:
        if m is not None:
            counts += m
            ok += 1
    if ok == 0:
        raise AllTrialsDegenerate(spec.trials)
    probs = tuple(float(c) / ok for c in counts)
    return StabilityReport(cs, probs, spec.trials, spec.trials - ok)
