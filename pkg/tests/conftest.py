import shared


def pytest_terminal_summary(terminalreporter):
    if not shared.ACCEPTANCE:
        return
    from test_acceptance import summary_lines

    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
