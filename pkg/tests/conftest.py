import numpy as np
import pytest

from cqft.sampling import random_axis

ACCEPTANCE_LINES = []


def rel_err(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    scale = max(float(np.max(np.abs(b))), 1e-300)
    return float(np.max(np.abs(a - b))) / scale


def cq_close(q, p, tol=1e-12):
    return max(abs(a - b) for a, b in zip(q.components(), p.components())) <= tol


@pytest.fixture
def rng():
    return np.random.default_rng(20240615)


@pytest.fixture(scope="session")
def axes():
    r = np.random.default_rng(7)
    return [random_axis(r) for _ in range(50)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
