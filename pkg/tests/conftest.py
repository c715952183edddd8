import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gasvd import AlgebraContext  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20231016)


@pytest.fixture
def g20():
    return AlgebraContext.of(2, 0)


@pytest.fixture
def g20c():
    return AlgebraContext.of(2, 0, True)


def pytest_terminal_summary(terminalreporter):
    from _report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, text = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {text}")
