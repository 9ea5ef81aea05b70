import sys
import time
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", max_examples=50, deadline=None, derandomize=True)
settings.load_profile("suite")

SUITE_BUDGET_SECONDS = 60.0
_state = {}


def pytest_sessionstart(session):
    _state["start"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _state.get("start", time.perf_counter())
    _state["elapsed"] = elapsed
    if elapsed >= SUITE_BUDGET_SECONDS and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", {})
    if acceptance is None:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
    elapsed = _state.get("elapsed")
    if elapsed is not None:
        verdict = "PASS" if elapsed < SUITE_BUDGET_SECONDS else "FAIL"
        terminalreporter.write_line(
            f"criterion 8 (suite runtime): {verdict} {elapsed:.1f}s < {SUITE_BUDGET_SECONDS:.0f}s")
