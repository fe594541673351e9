import contextlib
import time

import pytest

ACCEPTANCE: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Context manager timing one acceptance criterion and recording its verdict."""

    @contextlib.contextmanager
    def run(number: int, title: str, limit: float | None = None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            within = limit is None or elapsed < limit
            verdict = "PASS" if ok and within else "FAIL"
            budget = f" (limit {limit:g}s)" if limit is not None else ""
            ACCEPTANCE[number] = f"[{verdict}] criterion {number}: {title} in {elapsed:.2f}s{budget}"
        assert within, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
