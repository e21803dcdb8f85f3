import pytest

RESULTS: dict[int, bool] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion.

    A test calls ``criterion(k, ok)`` once per check it makes; the line is
    FAIL if any of them was false.
    """
    def record(k: int, ok: bool) -> bool:
        RESULTS[k] = RESULTS.get(k, True) and bool(ok)
        print(f"criterion {k}: {'PASS' if RESULTS[k] else 'FAIL'}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(RESULTS):
        terminalreporter.write_line(f"criterion {k}: {'PASS' if RESULTS[k] else 'FAIL'}")
