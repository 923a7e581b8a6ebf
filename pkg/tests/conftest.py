import pytest

# criterion number -> (title, passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {title}  ({detail})")


@pytest.fixture
def record_criterion():
    def record(k, title, ok, detail=""):
        ACCEPTANCE[k] = (title, bool(ok), detail)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}  ({detail})")
        assert ok, detail

    return record
