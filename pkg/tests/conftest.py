import pytest

# (criterion number, description, passed, detail) filled by test_acceptance
ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(number, text, passed, detail=""):
        ACCEPTANCE.append((number, text, passed, detail))
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number, text, passed, detail in sorted(ACCEPTANCE):
        line = f"{'PASS' if passed else 'FAIL'}  [{number:>2}] {text}"
        if detail:
            line += f"  ({detail})"
        tr.write_line(line)
