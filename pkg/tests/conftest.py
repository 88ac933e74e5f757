import pytest

CRITERION_LINES = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def criterion_log(request):
    """Shared list collecting one PASS/FAIL line per acceptance criterion."""
    return request.config.stash.setdefault(CRITERION_LINES, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(CRITERION_LINES, None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line)
