"""Pytest plumbing: collect acceptance verdicts into one summary block."""

_criteria = []


def record_criterion(line):
    _criteria.append(line)


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for line in _criteria:
            terminalreporter.line(line)
