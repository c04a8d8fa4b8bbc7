import time
from contextlib import contextmanager

import pytest

# criterion number -> (passed, title, seconds)
ACCEPTANCE_RESULTS = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion and enforce its runtime limit."""

    @contextmanager
    def record(number, title, limit=None):
        start = time.perf_counter()
        passed = False
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None:
                assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            passed = True
        finally:
            ACCEPTANCE_RESULTS[number] = (passed, title, time.perf_counter() - start)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, title, seconds = ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} ({seconds:.2f}s)")
