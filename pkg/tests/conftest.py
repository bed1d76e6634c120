import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from dematel import data  # noqa: E402
from dematel.engine import run_pipeline  # noqa: E402
from dematel.io import parse_criteria_manifest, parse_drm_csv, parse_survey_csv  # noqa: E402
from dematel.model import CriteriaSet, ExpertResponse  # noqa: E402


@pytest.fixture(scope="session")
def shipped_cs():
    return parse_criteria_manifest(data.read_text(data.CRITERIA))


@pytest.fixture(scope="session")
def shipped_drm(shipped_cs):
    return parse_drm_csv(data.read_text(data.DRM), shipped_cs)


@pytest.fixture(scope="session")
def shipped_panel(shipped_cs):
    return parse_survey_csv(data.read_text(data.PANEL), shipped_cs)


@pytest.fixture(scope="session")
def shipped_result(shipped_drm, shipped_cs):
    return run_pipeline(shipped_drm, shipped_cs)


def random_grid(rng, n, low=0, high=4):
    g = rng.integers(low, high + 1, size=(n, n))
    np.fill_diagonal(g, 0)
    return g


@st.composite
def panels(draw, n_range=(2, 12), p_range=(1, 15)):
    """(CriteriaSet, [ExpertResponse]) with at least one nonzero score."""
    n = draw(st.integers(*n_range))
    p = draw(st.integers(*p_range))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    grids = [random_grid(rng, n) for _ in range(p)]
    if not any(g.any() for g in grids):
        grids[0][0, 1] = 1
    cs = CriteriaSet.from_codes([f"K{i}" for i in range(n)])
    return cs, [ExpertResponse(f"e{k}", g) for k, g in enumerate(grids)]


@st.composite
def substochastic(draw, n_range=(2, 12), max_row_sum=0.95):
    n = draw(st.integers(*n_range))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    x = rng.random((n, n))
    target = rng.uniform(0.0, max_row_sum, size=(n, 1))
    return x / x.sum(axis=1, keepdims=True) * target


# -- acceptance reporting ------------------------------------------------------
# Tests marked ``acceptance(number, title)`` get one PASS/FAIL line each in the
# terminal summary.  A test may attach a detail string via
# ``record_property("detail", ...)``.

_ACCEPTANCE = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")
    config.stash[_ACCEPTANCE] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return rep
    results = item.config.stash[_ACCEPTANCE]
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = dict(item.user_properties).get("detail", "")
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        results[number] = (title, status, detail)
    return rep


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, status, detail = results[number]
        line = f"[{status}] #{number:<2} {title}"
        terminalreporter.write_line(f"{line}: {detail}" if detail else line)
