import pytest

ACCEPTANCE = {}


def record(number, title, passed, detail=""):
    ACCEPTANCE[number] = (title, passed, detail)
    line = f"criterion {number} [{title}]: {'PASS' if passed else 'FAIL'}"
    print(line + (f" ({detail})" if detail else ""))


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        line = f"criterion {number} [{title}]: {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
