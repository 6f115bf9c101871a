"""Shared test plumbing: collects acceptance-criterion verdicts and
prints them in a dedicated section of the terminal summary."""

acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
