import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one 'ACn PASS|FAIL|INFO detail' line and return it."""
    lines = request.config.stash.setdefault(_LINES, [])

    def record(criterion, passed, detail, info=False):
        tag = "INFO" if info else ("PASS" if passed else "FAIL")
        line = f"{criterion} {tag} {detail}"
        lines.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
