from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

from grhopf.cli.main import default_fixtures_dir
from grhopf.cli.parser import load_presentation
from grhopf.gralg.algebra import build_algebra
from grhopf.hopf import hopf_from_presentation

FIXTURES = default_fixtures_dir()
DATA = Path(__file__).parent / "data"
FIXTURE_NAMES = ["ex2_7", "ex2_8", "a1", "mu3_q", "mu3_f2", "c_ex53", "d_variety"]
NEGATIVE_NAMES = [
    "mu3_f2_primitive",
    "a1_counit_break",
    "a1_stale_antipode",
    "c_ex53_counit_break",
    "ex2_7_scaled",
    "coassoc_break",
]


def fixture_path(name: str) -> Path:
    p = FIXTURES / f"{name}.ghopf"
    return p if p.exists() else DATA / f"{name}.ghopf"


def load(name: str):
    return hopf_from_presentation(load_presentation(fixture_path(name)))


def ring(name: str):
    return build_algebra(load_presentation(FIXTURES / "rings" / f"{name}.ghopf"))


@pytest.fixture
def hopf():
    return load


# -- acceptance summary and whole-suite runtime --------------------------------------

SUITE_BUDGET_S = 60.0
_state: dict[str, float | bool] = {}


def pytest_sessionstart(session):
    _state["start"] = time.perf_counter()


def pytest_collection_finish(session):
    files = {Path(str(item.fspath)).name for item in session.items}
    # the runtime budget applies to the whole suite, not to a selection of it
    _state["full"] = len(files) > 1 and "test_acceptance.py" in files


def _runtime() -> float:
    return time.perf_counter() - float(_state.get("start", time.perf_counter()))


def pytest_sessionfinish(session, exitstatus):
    _state["elapsed"] = _runtime()
    if _state.get("full") and _state["elapsed"] >= SUITE_BUDGET_S and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.summary_line(n))
    if _state.get("full"):
        elapsed = float(_state.get("elapsed", _runtime()))
        mark = "PASS" if elapsed < SUITE_BUDGET_S else "FAIL"
        terminalreporter.write_line(f"{mark} criterion 9: full suite runtime {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")
