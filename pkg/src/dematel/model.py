"""Domain types shared across the pipeline.

Matrices are stored as read-only float64 (or int64 for raw scores) numpy
arrays.  Row ``i`` / column ``j`` of every matrix refers to criterion ``i``
/ ``j`` of the owning :class:`CriteriaSet`, and entry ``[i, j]`` is the
influence of criterion ``i`` on criterion ``j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NonzeroDiagonal, OutOfScale

SCALE_MIN = 0
SCALE_MAX = 4

# Display-only; the integer codes are what the pipeline consumes.
SCALE_LABELS = {
    0: "No influence",
    1: "Low influence",
    2: "Moderate influence",
    3: "High influence",
    4: "Very high influence",
}


class Group(str, enum.Enum):
    CAUSE = "cause"
    EFFECT = "effect"


class Strength(str, enum.Enum):
    STRONG = "strong"
    MODERATE = "moderate"
    WEAK = "weak"


def _frozen(a, dtype=np.float64) -> np.ndarray:
    out = np.array(a, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class Criterion:
    code: str
    name: str = ""

    def __post_init__(self):
        if not self.code:
            raise ValueError("criterion code must be non-empty")

    @property
    def label(self) -> str:
        return f"{self.code}: {self.name}" if self.name else self.code


@dataclass(frozen=True)
class CriteriaSet:
    """Ordered criteria; position fixes the matrix index."""

    criteria: tuple[Criterion, ...]

    def __post_init__(self):
        object.__setattr__(self, "criteria", tuple(self.criteria))
        if len(self.criteria) < 2:
            raise ValueError(f"a criteria set needs at least 2 criteria, got {len(self.criteria)}")
        codes = [c.code for c in self.criteria]
        if len(set(codes)) != len(codes):
            dup = next(c for c in codes if codes.count(c) > 1)
            raise ValueError(f"duplicate criterion code {dup!r}")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[str, str]]) -> "CriteriaSet":
        return cls(tuple(Criterion(code, name) for code, name in pairs))

    @classmethod
    def from_codes(cls, codes: Sequence[str]) -> "CriteriaSet":
        return cls(tuple(Criterion(c) for c in codes))

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def codes(self) -> list[str]:
        return [c.code for c in self.criteria]

    def index(self, code: str) -> int:
        for i, c in enumerate(self.criteria):
            if c.code == code:
                return i
        raise KeyError(code)

    def __len__(self):
        return len(self.criteria)

    def __iter__(self):
        return iter(self.criteria)

    def __getitem__(self, i):
        return self.criteria[i]

    def permuted(self, perm: Sequence[int]) -> "CriteriaSet":
        """New set whose position ``k`` holds the old criterion ``perm[k]``."""
        return CriteriaSet(tuple(self.criteria[p] for p in perm))


@dataclass(frozen=True, eq=False)
class ExpertResponse:
    """One expert's raw n x n integer score grid.

    Construction only coerces the grid to an integer array; structural
    checks happen in :func:`validate_expert_response`.
    """

    expert_id: str
    scores: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.scores)
        if raw.dtype.kind == "f":
            if not np.all(np.isfinite(raw)) or np.any(raw != np.round(raw)):
                bad = np.argwhere(~np.isfinite(raw) | (raw != np.round(raw)))[0]
                raise OutOfScale(int(bad[0]), int(bad[1]), raw[tuple(bad)].item(), self.expert_id)
        elif raw.dtype.kind not in "iub":
            raise TypeError(f"scores must be numeric, got dtype {raw.dtype}")
        object.__setattr__(self, "scores", _frozen(raw, np.int64))

    def __eq__(self, other):
        if not isinstance(other, ExpertResponse):
            return NotImplemented
        return self.expert_id == other.expert_id and np.array_equal(self.scores, other.scores)

    def __hash__(self):
        return hash((self.expert_id, self.scores.tobytes()))


@dataclass(frozen=True, eq=False)
class DirectRelationMatrix:
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    values: np.ndarray
    s: float

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))


@dataclass(frozen=True, eq=False)
class TotalRelationMatrix:
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))


@dataclass(frozen=True)
class ProminenceRecord:
    criterion: Criterion
    d: float
    r: float
    prominence: float
    relation: float
    group: Group

    @classmethod
    def from_sums(cls, criterion: Criterion, d: float, r: float) -> "ProminenceRecord":
        relation = d - r
        group = Group.EFFECT if relation < 0 else Group.CAUSE
        return cls(criterion, d, r, d + r, relation, group)


@dataclass(frozen=True)
class Edge:
    source: Criterion
    target: Criterion
    weight: float
    strength: Strength


@dataclass(frozen=True, eq=False)
class AnalysisResult:
    criteria: CriteriaSet
    drm: DirectRelationMatrix
    nrm: NormalizedMatrix
    trm: TotalRelationMatrix
    alpha: float
    alpha_cut: np.ndarray
    records: tuple[ProminenceRecord, ...]
    edges: tuple[Edge, ...] = field(default_factory=tuple)
    # Threshold actually applied for the cut; equals alpha unless overridden.
    cut_threshold: float | None = None

    def __post_init__(self):
        if self.cut_threshold is None:
            object.__setattr__(self, "cut_threshold", self.alpha)
        object.__setattr__(self, "alpha_cut", _frozen(self.alpha_cut))
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "edges", tuple(self.edges))

    def group_of(self, code: str) -> Group:
        return next(r.group for r in self.records if r.criterion.code == code)

    @property
    def cause_codes(self) -> list[str]:
        return [r.criterion.code for r in self.records if r.group is Group.CAUSE]

    @property
    def effect_codes(self) -> list[str]:
        return [r.criterion.code for r in self.records if r.group is Group.EFFECT]


def validate_expert_response(resp: ExpertResponse, cs: CriteriaSet) -> ExpertResponse:
    """Check shape, scale bounds and zero diagonal; return ``resp`` unchanged.

    Cells are scanned row-major so the first offending cell is reported.
    """
    scores = resp.scores
    n = cs.n
    if scores.ndim != 2 or scores.shape != (n, n):
        raise DimensionMismatch((n, n), scores.shape, what=f"expert {resp.expert_id!r}")
    for i in range(n):
        for j in range(n):
            v = int(scores[i, j])
            if i == j:
                if v != 0:
                    raise NonzeroDiagonal(i, v, resp.expert_id)
            elif not SCALE_MIN <= v <= SCALE_MAX:
                raise OutOfScale(i, j, v, resp.expert_id)
    return resp
