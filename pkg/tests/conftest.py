"""Shared fixtures: acceptance-result collection and terminal summary."""
import pytest


def pytest_configure(config):
    config._acceptance_results = {}


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line for an end-to-end acceptance check."""
    results = request.config._acceptance_results

    def record(index, total, label, passed, detail=""):
        results[index] = (total, label, bool(passed), detail)
        return bool(passed)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", {})
    if not results:
        return
    terminalreporter.section("acceptance checks")
    for index in sorted(results):
        total, label, passed, detail = results[index]
        verdict = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        terminalreporter.write_line(f"[{index}/{total}] {verdict} {label}{suffix}")
