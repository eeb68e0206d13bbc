import test_acceptance_log


def pytest_terminal_summary(terminalreporter):
    lines = test_acceptance_log.LINES
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
