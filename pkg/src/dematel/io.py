"""Text formats: criteria manifest, long-format survey, DRM grid, JSON report,
DOT digraph and scatter CSV.

All readers take and all writers return ``str``; file handling is left to the
caller.  CSV output uses ``,`` separators and ``\\n`` line endings.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DematelError,
    DuplicateCell,
    DuplicateCode,
    MissingCell,
    NonzeroDiagonal,
    OutOfRange,
    OutOfScale,
    ParseError,
    UnknownCode,
)
from .model import (
    SCALE_MAX,
    SCALE_MIN,
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
)

SURVEY_HEADER = ["expert_id", "from", "to", "score"]
SCATTER_HEADER = ["code", "prominence", "relation", "group"]
MANIFEST_HEADER = ["code", "name"]

REPORT_FORMAT = "dematel-report/1"


# -- number formatting ---------------------------------------------------------

def round_half_away(x: float, digits: int = 4) -> Decimal:
    q = Decimal(1).scaleb(-digits)
    return Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP)


def display(x: float, digits: int = 4) -> str:
    """Fixed-point string, rounded half away from zero (``10.462 -> '10.4620'``)."""
    d = round_half_away(x, digits)
    if d == 0:
        d = abs(d)
    return f"{d:.{digits}f}"


def _compact(x: float, digits: int | None) -> str:
    # Round, then drop trailing zeros, e.g. 20.1064007 at 5 d.p. -> "20.1064".
    if digits is None:
        return repr(float(x))
    s = display(x, digits)
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _csv_text(rows: Iterable[Sequence]) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _csv_rows(text: str):
    """Yield (line_number, fields) for non-blank lines."""
    reader = csv.reader(_io.StringIO(text.lstrip("﻿")))
    try:
        for fields in reader:
            if not fields or all(not f.strip() for f in fields):
                continue
            yield reader.line_num, [f.strip() for f in fields]
    except csv.Error as exc:
        raise ParseError(reader.line_num, f"malformed CSV: {exc}") from None


# -- criteria manifest ---------------------------------------------------------

def parse_criteria_manifest(text: str) -> CriteriaSet:
    """``code,name`` lines in matrix order; a ``code,name`` header is optional."""
    pairs = []
    seen: set[str] = set()
    for line, fields in _csv_rows(text):
        if not pairs and [f.lower() for f in fields] == MANIFEST_HEADER:
            continue
        if len(fields) != 2:
            raise ParseError(line, f"expected 2 fields (code,name), got {len(fields)}")
        code, name = fields
        if not code:
            raise ParseError(line, "empty criterion code")
        if code in seen:
            raise DuplicateCode(line, code)
        seen.add(code)
        pairs.append((code, name))
    if len(pairs) < 2:
        raise ParseError(None, f"manifest must list at least 2 criteria, found {len(pairs)}")
    return CriteriaSet.from_pairs(pairs)


def write_criteria_manifest(cs: CriteriaSet) -> str:
    return _csv_text([MANIFEST_HEADER] + [[c.code, c.name] for c in cs])


# -- long-format survey --------------------------------------------------------

def scan_survey_csv(text: str, cs: CriteriaSet) -> tuple[list[ExpertResponse], list[DematelError]]:
    """Parse a survey, collecting every problem instead of stopping at the first.

    Returns the responses for experts with no errors, plus the error list.
    """
    errors: list[DematelError] = []
    rows = _csv_rows(text)
    first = next(rows, None)
    if first is None:
        return [], [ParseError(None, "empty survey file")]
    line, header = first
    if [h.lower() for h in header] != SURVEY_HEADER:
        return [], [ParseError(line, f"header must be {','.join(SURVEY_HEADER)}, got {','.join(header)}")]

    n = cs.n
    index = {c: i for i, c in enumerate(cs.codes)}
    grids: dict[str, np.ndarray] = {}
    filled: dict[str, np.ndarray] = {}
    bad_experts: set[str] = set()

    for line, fields in rows:
        if len(fields) != 4:
            errors.append(ParseError(line, f"expected 4 fields, got {len(fields)}"))
            continue
        expert, src, dst, raw = fields
        if not expert:
            errors.append(ParseError(line, "empty expert_id"))
            continue
        if expert not in grids:
            grids[expert] = np.zeros((n, n), dtype=np.int64)
            filled[expert] = np.zeros((n, n), dtype=bool)
        unknown = [c for c in (src, dst) if c not in index]
        if unknown:
            errors.append(UnknownCode(line, unknown[0]))
            bad_experts.add(expert)
            continue
        i, j = index[src], index[dst]
        try:
            value = float(raw)
        except ValueError:
            errors.append(ParseError(line, f"score {raw!r} is not a number"))
            bad_experts.add(expert)
            continue
        if i == j:
            if value != 0:
                errors.append(NonzeroDiagonal(i, raw, expert))
                bad_experts.add(expert)
            continue
        if filled[expert][i, j]:
            errors.append(DuplicateCell(line, expert, src, dst))
            bad_experts.add(expert)
            continue
        # a bad score still counts as present, so it is not also reported missing
        filled[expert][i, j] = True
        if not (value.is_integer() and SCALE_MIN <= value <= SCALE_MAX):
            errors.append(OutOfScale(src, dst, raw, expert))
            bad_experts.add(expert)
            continue
        grids[expert][i, j] = int(value)

    responses = []
    for expert, grid in grids.items():
        missing = ~filled[expert]
        np.fill_diagonal(missing, False)
        if missing.any():
            for i, j in zip(*np.nonzero(missing)):
                errors.append(MissingCell(expert, cs.codes[i], cs.codes[j]))
            continue
        if expert not in bad_experts:
            responses.append(ExpertResponse(expert, grid))
    if not grids and not errors:
        errors.append(ParseError(None, "survey contains no responses"))
    return responses, errors


def parse_survey_csv(text: str, cs: CriteriaSet) -> list[ExpertResponse]:
    """Long-format ``expert_id,from,to,score`` rows to one response per expert.

    Experts appear in order of first mention.  Every off-diagonal cell must
    be given exactly once per expert; the first problem found is raised.
    """
    responses, errors = scan_survey_csv(text, cs)
    if errors:
        raise errors[0]
    return responses


def write_survey_csv(responses: Sequence[ExpertResponse], cs: CriteriaSet) -> str:
    rows: list[list] = [SURVEY_HEADER]
    codes = cs.codes
    for r in responses:
        for i in range(cs.n):
            for j in range(cs.n):
                if i != j:
                    rows.append([r.expert_id, codes[i], codes[j], int(r.scores[i, j])])
    return _csv_text(rows)


# -- direct-relation matrix grid -----------------------------------------------

def parse_drm_csv(text: str, cs: CriteriaSet) -> DirectRelationMatrix:
    """Square grid with criterion codes along the header row and first column,
    both in manifest order."""
    rows = list(_csv_rows(text))
    if not rows:
        raise ParseError(None, "empty matrix file")
    n = cs.n
    line, header = rows[0]
    if header[1:] != cs.codes:
        raise ParseError(line, f"header codes {header[1:]} do not match manifest order {cs.codes}")
    body = rows[1:]
    if len(body) != n:
        raise ParseError(None, f"expected {n} data rows, got {len(body)}")
    values = np.zeros((n, n))
    for i, (line, fields) in enumerate(body):
        if fields[0] != cs.codes[i]:
            raise ParseError(line, f"row label {fields[0]!r} should be {cs.codes[i]!r}")
        if len(fields) != n + 1:
            raise ParseError(line, f"expected {n} values, got {len(fields) - 1}")
        for j, raw in enumerate(fields[1:]):
            try:
                v = float(raw)
            except ValueError:
                raise ParseError(line, f"value {raw!r} in column {cs.codes[j]} is not a number") from None
            if i == j and v != 0:
                raise NonzeroDiagonal(i, v)
            if not 0.0 <= v <= 4.0:
                raise OutOfRange(cs.codes[i], cs.codes[j], v)
            values[i, j] = v
    return DirectRelationMatrix(values)


def write_drm_csv(drm: DirectRelationMatrix, cs: CriteriaSet) -> str:
    v = drm.values
    rows = [[""] + cs.codes]
    rows += [[cs.codes[i]] + [repr(float(x)) for x in v[i]] for i in range(cs.n)]
    return _csv_text(rows)


# -- JSON report ---------------------------------------------------------------

def _matrix_doc(m: np.ndarray) -> dict:
    return {
        "values": [[float(x) for x in row] for row in m],
        "display": [[display(x) for x in row] for row in m],
    }


def write_report_json(result: AnalysisResult) -> str:
    cs = result.criteria
    doc = {
        "format": REPORT_FORMAT,
        "criteria": [{"code": c.code, "name": c.name} for c in cs],
        "s": result.nrm.s,
        "alpha": result.alpha,
        "cut_threshold": result.cut_threshold,
        "display": {"s": display(result.nrm.s), "alpha": display(result.alpha)},
        "matrices": {
            "drm": _matrix_doc(result.drm.values),
            "nrm": _matrix_doc(result.nrm.values),
            "trm": _matrix_doc(result.trm.values),
            "alpha_cut": _matrix_doc(result.alpha_cut),
        },
        "records": [
            {
                "code": r.criterion.code,
                "d": r.d,
                "r": r.r,
                "prominence": r.prominence,
                "relation": r.relation,
                "group": r.group.value,
                "display": {k: display(getattr(r, k)) for k in ("d", "r", "prominence", "relation")},
            }
            for r in result.records
        ],
        "edges": [
            {
                "from": e.source.code,
                "to": e.target.code,
                "weight": e.weight,
                "strength": e.strength.value,
                "display": display(e.weight),
            }
            for e in result.edges
        ],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def read_report_json(text: str) -> AnalysisResult:
    """Rebuild an :class:`AnalysisResult` from :func:`write_report_json` output."""
    try:
        doc = json.loads(text)
        cs = CriteriaSet.from_pairs([(c["code"], c["name"]) for c in doc["criteria"]])
        by_code = {c.code: c for c in cs}
        m = doc["matrices"]
        records = tuple(
            ProminenceRecord(by_code[r["code"]], r["d"], r["r"], r["prominence"], r["relation"], Group(r["group"]))
            for r in doc["records"]
        )
        edges = tuple(
            Edge(by_code[e["from"]], by_code[e["to"]], e["weight"], Strength(e["strength"])) for e in doc["edges"]
        )
        return AnalysisResult(
            criteria=cs,
            drm=DirectRelationMatrix(np.array(m["drm"]["values"], dtype=np.float64)),
            nrm=NormalizedMatrix(np.array(m["nrm"]["values"], dtype=np.float64), doc["s"]),
            trm=TotalRelationMatrix(np.array(m["trm"]["values"], dtype=np.float64)),
            alpha=doc["alpha"],
            alpha_cut=np.array(m["alpha_cut"]["values"], dtype=np.float64),
            records=records,
            edges=edges,
            cut_threshold=doc.get("cut_threshold"),
        )
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(None, f"not a report document: {exc!r}") from None


# -- DOT digraph ---------------------------------------------------------------

GROUP_COLORS = {Group.CAUSE: "red", Group.EFFECT: "blue"}
STRENGTH_STYLES = {Strength.STRONG: "solid", Strength.MODERATE: "dashed", Strength.WEAK: "dotted"}


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(edges: Sequence[Edge], cs: CriteriaSet, records: Sequence[ProminenceRecord] | None = None) -> str:
    """Graphviz digraph: nodes coloured by group, edges labelled by weight
    and styled solid/dashed/dotted for strong/moderate/weak."""
    groups = {r.criterion.code: r.group for r in records or ()}
    lines = ["digraph dematel {", "  rankdir=LR;", "  node [shape=box, style=rounded];"]
    for c in cs:
        attrs = [f"label={_dot_quote(c.label)}"]
        g = groups.get(c.code)
        if g is not None:
            attrs.append(f"color={GROUP_COLORS[g]}")
            attrs.append(f"fontcolor={GROUP_COLORS[g]}")
            attrs.append(f"group={g.value}")
        lines.append(f"  {_dot_quote(c.code)} [{', '.join(attrs)}];")
    for e in edges:
        lines.append(
            f"  {_dot_quote(e.source.code)} -> {_dot_quote(e.target.code)} "
            f"[label={_dot_quote(display(e.weight))}, tooltip={_dot_quote(repr(e.weight))}, style={STRENGTH_STYLES[e.strength]}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- scatter CSV ---------------------------------------------------------------

def write_scatter_csv(
    records: Sequence[ProminenceRecord],
    prominence_digits: int | None = 5,
    relation_digits: int | None = 7,
) -> str:
    """Prominence (x) and relation (y) per criterion.

    Defaults match the precision of the published prominence/relation table;
    pass ``None`` for either to write the shortest exact float repr instead.
    """
    rows: list[list] = [SCATTER_HEADER]
    for r in records:
        rows.append([
            r.criterion.code,
            _compact(r.prominence, prominence_digits),
            _compact(r.relation, relation_digits),
            r.group.value,
        ])
    return _csv_text(rows)


def read_scatter_csv(text: str) -> list[tuple[str, float, float, Group]]:
    rows = _csv_rows(text)
    first = next(rows, None)
    if first is None or [h.lower() for h in first[1]] != SCATTER_HEADER:
        raise ParseError(first[0] if first else None, f"header must be {','.join(SCATTER_HEADER)}")
    out = []
    for line, fields in rows:
        if len(fields) != 4:
            raise ParseError(line, f"expected 4 fields, got {len(fields)}")
        try:
            p, q = float(fields[1]), float(fields[2])
            g = Group(fields[3].lower())
        except ValueError as exc:
            raise ParseError(line, str(exc)) from None
        if not (math.isfinite(p) and math.isfinite(q)):
            raise ParseError(line, "non-finite coordinate")
        out.append((fields[0], p, q, g))
    return out


# -- stability CSV -------------------------------------------------------------

def write_stability_csv(report) -> str:
    rows: list[list] = [["code", "cause_probability"]]
    rows += [[code, repr(p)] for code, p in report.as_dict().items()]
    return _csv_text(rows)
