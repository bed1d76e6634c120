"""Command-line interface: ``dematel {validate,analyze,sensitivity,digraph,scatter}``.

Data goes to files (or stdout for the re-export commands and summaries);
diagnostics go to stderr.  Exit status is 0 on success, 1 on an input or
analysis error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .engine import NormMode, PipelineOptions, run_pipeline
from .errors import DematelError
from .io import (
    display,
    parse_criteria_manifest,
    parse_drm_csv,
    parse_survey_csv,
    read_report_json,
    scan_survey_csv,
    write_dot,
    write_report_json,
    write_scatter_csv,
    write_stability_csv,
)
from .model import validate_expert_response
from .sensitivity import PerturbationSpec, monte_carlo_stability

REPORT_NAME = "report.json"
DOT_NAME = "digraph.dot"
SCATTER_NAME = "scatter.csv"
STABILITY_NAME = "stability.csv"


class CliError(Exception):
    pass


def _read(path: str) -> str:
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise CliError(f"file not found: {path}") from None
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_float(s: str) -> float:
    v = float(s)
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {s}")
    return v


def _probability(s: str) -> float:
    v = float(s)
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {s}")
    return v


def _load_criteria(args):
    return parse_criteria_manifest(_read(args.criteria))


def _load_input(args, cs):
    if args.drm is not None:
        return parse_drm_csv(_read(args.drm), cs)
    responses = parse_survey_csv(_read(args.survey), cs)
    for r in responses:
        validate_expert_response(r, cs)
    return responses


def _pipeline_options(args) -> PipelineOptions:
    return PipelineOptions(
        norm_mode=NormMode(args.norm_mode),
        alpha_override=args.alpha_override,
        strength_bounds=tuple(args.strength_bounds) if args.strength_bounds else None,
    )


def cmd_validate(args) -> int:
    cs = _load_criteria(args)
    responses, errors = scan_survey_csv(_read(args.survey), cs)
    for r in responses:
        try:
            validate_expert_response(r, cs)
        except DematelError as exc:
            errors.append(exc)
    if errors:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        print(f"{len(errors)} problem(s) found", file=sys.stderr)
        return 1
    n_off = cs.n * (cs.n - 1)
    for r in responses:
        mean = r.scores.sum() / n_off
        print(f"{r.expert_id}: {n_off} cells, mean score {mean:.2f}")
    print(f"{len(responses)} experts, {cs.n} criteria, complete")
    return 0


def format_summary(result) -> str:
    lines = ["code D R D+R D-R group"]
    for r in result.records:
        cells = [display(v) for v in (r.d, r.r, r.prominence, r.relation)]
        lines.append(" ".join([r.criterion.code, *cells, r.group.value]))
    lines.append(f"alpha = {display(result.alpha)}")
    if result.cut_threshold != result.alpha:
        lines.append(f"cut threshold = {display(result.cut_threshold)} (override)")
    lines.append(f"edges = {len(result.edges)}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    cs = _load_criteria(args)
    data = _load_input(args, cs)
    result = run_pipeline(data, cs, _pipeline_options(args))
    out = Path(args.output_dir)
    _write(out / REPORT_NAME, write_report_json(result))
    _write(out / DOT_NAME, write_dot(result.edges, cs, result.records))
    _write(out / SCATTER_NAME, write_scatter_csv(result.records))
    sys.stdout.write(format_summary(result))
    return 0


def cmd_sensitivity(args) -> int:
    cs = _load_criteria(args)
    responses = parse_survey_csv(_read(args.survey), cs)
    spec = PerturbationSpec(
        flip_probability=args.flip_probability,
        magnitude=args.magnitude,
        seed=args.seed,
        trials=args.trials,
    )
    opts = PipelineOptions(norm_mode=NormMode(args.norm_mode))
    report = monte_carlo_stability(responses, cs, spec, opts, workers=args.workers)
    out = Path(args.output_dir)
    _write(out / STABILITY_NAME, write_stability_csv(report))
    for code, p in report.as_dict().items():
        print(f"{code} {p:.4f}")
    print(f"trials = {report.trials_run}, degenerate = {report.degenerate_trials}")
    return 0


def _emit(text: str, output: str | None) -> None:
    if output:
        _write(Path(output), text)
    else:
        sys.stdout.write(text)


def cmd_digraph(args) -> int:
    result = read_report_json(_read(args.report))
    _emit(write_dot(result.edges, result.criteria, result.records), args.output)
    return 0


def cmd_scatter(args) -> int:
    result = read_report_json(_read(args.report))
    digits = (None, None) if args.full_precision else (5, 7)
    _emit(write_scatter_csv(result.records, *digits), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dematel", description="DEMATEL cause/effect analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    def criteria_arg(p):
        p.add_argument("--criteria", required=True, help="criteria manifest CSV (code,name)")

    def norm_arg(p):
        p.add_argument(
            "--norm-mode",
            choices=[m.value for m in NormMode],
            default=NormMode.ROW_COL_MAX.value,
            help="normalization divisor (default: %(default)s)",
        )

    p = sub.add_parser("validate", help="check a survey file against the criteria")
    criteria_arg(p)
    p.add_argument("--survey", required=True, help="long-format survey CSV")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="run the full analysis and write report/digraph/scatter")
    criteria_arg(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--survey", help="long-format survey CSV")
    src.add_argument("--drm", help="pre-aggregated direct-relation matrix CSV")
    norm_arg(p)
    p.add_argument("--alpha-override", type=_nonneg_float, default=None, help="cut threshold to use instead of the mean")
    p.add_argument("--strength-bounds", type=float, nargs=2, metavar=("WEAK_MAX", "STRONG_MIN"), default=None,
                   help="edge weights >= STRONG_MIN are strong, >= WEAK_MAX moderate, else weak")
    p.add_argument("--output-dir", default=".", help="directory for output files (default: cwd)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sensitivity", help="Monte-Carlo stability of the cause/effect groups")
    criteria_arg(p)
    p.add_argument("--survey", required=True, help="long-format survey CSV")
    norm_arg(p)
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--flip-probability", type=_probability, default=0.1)
    p.add_argument("--magnitude", type=_positive_int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--output-dir", default=".")
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("digraph", help="re-export the DOT digraph from a saved report")
    p.add_argument("--report", required=True)
    p.add_argument("--output", default=None, help="output path (default: stdout)")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("scatter", help="re-export the scatter CSV from a saved report")
    p.add_argument("--report", required=True)
    p.add_argument("--output", default=None, help="output path (default: stdout)")
    p.add_argument("--full-precision", action="store_true", help="write exact floats instead of table precision")
    p.set_defaults(func=cmd_scatter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, DematelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
