import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion's verdict, then assert it."""

    def check(label, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
        assert passed, f"{label}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
