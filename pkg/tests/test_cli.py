import json
import shutil
import subprocess
import sys

import pytest

from dematel import data
from dematel.cli import main


@pytest.fixture
def fixtures(tmp_path):
    for name in (data.CRITERIA, data.DRM, data.PANEL):
        shutil.copy(data.path(name), tmp_path / name)
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(fixtures, capsys):
    code, out, err = run(capsys, "validate", "--criteria", fixtures / data.CRITERIA, "--survey", fixtures / data.PANEL)
    assert code == 0
    assert "10 experts, 10 criteria, complete" in out
    assert err == ""


def test_validate_out_of_scale(fixtures, capsys):
    panel = fixtures / data.PANEL
    lines = panel.read_text().splitlines()
    k = next(i for i, l in enumerate(lines) if l.startswith("E03,C4,C5,"))
    lines[k] = "E03,C4,C5,7"
    panel.write_text("\n".join(lines) + "\n")
    code, out, err = run(capsys, "validate", "--criteria", fixtures / data.CRITERIA, "--survey", panel)
    assert code != 0
    assert "E03" in err and "C4" in err and "C5" in err and "7" in err


def test_validate_missing_criteria(fixtures, capsys):
    code, out, err = run(capsys, "validate", "--criteria", fixtures / "nope.csv", "--survey", fixtures / data.PANEL)
    assert code == 1
    assert "file not found" in err and "nope.csv" in err


def test_analyze_drm(fixtures, capsys, tmp_path):
    out_dir = tmp_path / "out"
    code, out, err = run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--drm", fixtures / data.DRM,
                         "--output-dir", out_dir)
    assert code == 0, err
    assert "C1 10.4620 9.0393 19.5012 1.4227 cause" in out.splitlines()
    assert "alpha = 0.9753" in out.splitlines()
    assert {p.name for p in out_dir.iterdir()} == {"report.json", "digraph.dot", "scatter.csv"}
    assert "C1,19.50125,1.4226752,cause" in (out_dir / "scatter.csv").read_text().splitlines()


def test_analyze_survey_matches_drm(fixtures, capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--drm", fixtures / data.DRM, "--output-dir", a)
    code, _, _ = run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--survey", fixtures / data.PANEL,
                     "--output-dir", b)
    assert code == 0
    for name in ("report.json", "digraph.dot", "scatter.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_analyze_alpha_override(fixtures, capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--drm", fixtures / data.DRM,
                       "--alpha-override", "99", "--output-dir", tmp_path)
    assert code == 0
    assert json.loads((tmp_path / "report.json").read_text())["edges"] == []
    assert "->" not in (tmp_path / "digraph.dot").read_text()


def test_analyze_strength_bounds_and_norm_mode(fixtures, capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--drm", fixtures / data.DRM,
                       "--strength-bounds", "1.0", "1.1", "--norm-mode", "row-max", "--output-dir", tmp_path)
    assert code == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert abs(doc["s"] - 23.6) < 1e-12
    for e in doc["edges"]:
        w = e["weight"]
        assert e["strength"] == ("strong" if w >= 1.1 else "moderate" if w >= 1.0 else "weak")


def test_analyze_usage_errors(fixtures, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--criteria", str(fixtures / data.CRITERIA)])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["analyze", "--criteria", "x", "--drm", "y", "--alpha-override", "-1"])


def test_analyze_degenerate(fixtures, capsys, tmp_path):
    zero = fixtures / "zero.csv"
    lines = [",A,B", "A,0,0", "B,0,0"]
    zero.write_text("\n".join(lines) + "\n")
    crit = fixtures / "ab.csv"
    crit.write_text("A,a\nB,b\n")
    code, out, err = run(capsys, "analyze", "--criteria", crit, "--drm", zero, "--output-dir", tmp_path)
    assert code == 1 and "all zeros" in err


def test_sensitivity(fixtures, capsys, tmp_path):
    args = ["sensitivity", "--criteria", fixtures / data.CRITERIA, "--survey", fixtures / data.PANEL,
            "--flip-probability", "0", "--trials", "50"]
    code, out, _ = run(capsys, *args, "--output-dir", tmp_path / "a")
    assert code == 0
    rows = dict(l.split(",") for l in (tmp_path / "a" / "stability.csv").read_text().splitlines()[1:])
    assert rows["C1"] == "1.0" and rows["C6"] == "0.0"


def test_sensitivity_deterministic(fixtures, capsys, tmp_path):
    args = ["sensitivity", "--criteria", fixtures / data.CRITERIA, "--survey", fixtures / data.PANEL,
            "--flip-probability", "0.2", "--trials", "30", "--seed", "99"]
    run(capsys, *args, "--output-dir", tmp_path / "a")
    run(capsys, *args, "--workers", "3", "--output-dir", tmp_path / "b")
    assert (tmp_path / "a" / "stability.csv").read_bytes() == (tmp_path / "b" / "stability.csv").read_bytes()


def test_sensitivity_zero_trials(fixtures, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sensitivity", "--criteria", str(fixtures / data.CRITERIA), "--survey", str(fixtures / data.PANEL),
              "--trials", "0"])
    assert exc.value.code == 2
    assert "trials" in capsys.readouterr().err


def test_sensitivity_all_degenerate(tmp_path, capsys):
    crit = tmp_path / "ab.csv"
    crit.write_text("A,a\nB,b\n")
    survey = tmp_path / "s.csv"
    survey.write_text("expert_id,from,to,score\ne,A,B,0\ne,B,A,0\n")
    code, _, err = run(capsys, "sensitivity", "--criteria", crit, "--survey", survey, "--flip-probability", "0",
                       "--trials", "3", "--output-dir", tmp_path)
    assert code == 1 and "degenerate" in err


def test_reexport_commands(fixtures, capsys, tmp_path):
    run(capsys, "analyze", "--criteria", fixtures / data.CRITERIA, "--drm", fixtures / data.DRM, "--output-dir", tmp_path)
    code, out, _ = run(capsys, "digraph", "--report", tmp_path / "report.json")
    assert code == 0 and out == (tmp_path / "digraph.dot").read_text()
    code, out, _ = run(capsys, "scatter", "--report", tmp_path / "report.json")
    assert code == 0 and out == (tmp_path / "scatter.csv").read_text()
    code, _, _ = run(capsys, "scatter", "--report", tmp_path / "report.json", "--full-precision",
                     "--output", tmp_path / "full.csv")
    assert "C1,19.501248" in (tmp_path / "full.csv").read_text()
    code, _, err = run(capsys, "digraph", "--report", fixtures / data.DRM)
    assert code == 1


def test_module_entry_point(fixtures, tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "dematel", "validate", "--criteria", str(fixtures / data.CRITERIA),
         "--survey", str(fixtures / data.PANEL)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "complete" in proc.stdout
