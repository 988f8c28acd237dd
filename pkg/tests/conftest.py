"""Shared pytest plumbing: surface the acceptance verdict lines."""

VERDICT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in VERDICT_LINES:
            terminalreporter.write_line(line)
