"""Regenerate src/dematel/data/panel.csv.

Builds a 10-expert integer panel whose per-cell means reproduce the bundled
direct-relation matrix exactly.  The three cells with published score
vectors use those vectors; every other cell spreads its total as evenly as
possible, rotating which experts receive the extra point.
"""

from pathlib import Path

import numpy as np

from dematel import data
from dematel.io import parse_criteria_manifest, parse_drm_csv, write_survey_csv
from dematel.model import ExpertResponse

P = 10
PUBLISHED = {
    ("C2", "C1"): [4, 1, 0, 4, 1, 4, 3, 4, 4, 4],
    ("C7", "C2"): [4, 4, 4, 4, 1, 3, 4, 4, 4, 4],
    ("C9", "C2"): [3, 0, 0, 3, 3, 3, 1, 0, 0, 0],
}


def build():
    cs = parse_criteria_manifest(data.read_text(data.CRITERIA))
    drm = parse_drm_csv(data.read_text(data.DRM), cs)
    n = cs.n
    scores = np.zeros((P, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            key = (cs.codes[i], cs.codes[j])
            if key in PUBLISHED:
                scores[:, i, j] = PUBLISHED[key]
                continue
            total = int(round(drm.values[i, j] * P))
            base, extra = divmod(total, P)
            offset = (i * n + j) % P
            for e in range(P):
                scores[e, i, j] = base + (1 if (e - offset) % P < extra else 0)
    assert np.array_equal(scores.sum(axis=0), np.round(drm.values * P).astype(np.int64))
    responses = [ExpertResponse(f"E{e + 1:02d}", scores[e]) for e in range(P)]
    return write_survey_csv(responses, cs)


if __name__ == "__main__":
    out = Path(__file__).resolve().parents[1] / "src" / "dematel" / "data" / data.PANEL
    out.write_text(build(), encoding="utf-8")
    print(f"wrote {out}")
