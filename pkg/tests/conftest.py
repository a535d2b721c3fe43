"""Shared test plumbing: a criterion log echoed into the terminal summary."""

import pytest

_CRITERION_LINES: list[str] = []


@pytest.fixture(scope="session")
def criterion_log():
    """Append one "criterion N: PASS/FAIL ..." line per acceptance criterion."""
    return _CRITERION_LINES.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in sorted(_CRITERION_LINES):
        terminalreporter.write_line(line)
