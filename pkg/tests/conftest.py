def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULT_LINES:
            terminalreporter.write_line(line)
