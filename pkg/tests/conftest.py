import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lozenge.counting import count_dp  # noqa: E402

_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def dp_table():
    """count_dp(n) for n = 1..15 with per-n wall time."""
    import time

    table, seconds = {}, {}
    for n in range(1, 16):
        start = time.perf_counter()
        table[n] = count_dp(n)
        seconds[n] = time.perf_counter() - start
    return table, seconds


@pytest.fixture(scope="session")
def acceptance_log(request):
    log = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return log


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_ACCEPTANCE_KEY, None)
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(log):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}" + (f" ({detail})" if detail else ""))
