from __future__ import annotations

import pytest

from domainsense import create_seed_lexicon

_ACCEPTANCE_MODULE = "test_acceptance"
_acceptance_results: dict[str, str] = {}


@pytest.fixture
def seed():
    return create_seed_lexicon()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or _ACCEPTANCE_MODULE not in item.nodeid:
        return
    if hasattr(report, "wasxfail"):
        _acceptance_results[item.name] = f"EXPECTED FAIL ({report.wasxfail})"
    else:
        _acceptance_results[item.name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance_results):
        terminalreporter.write_line(f"{label}: {_acceptance_results[label]}")
