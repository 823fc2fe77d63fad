import numpy as np
import pytest
from hypothesis import strategies as st

from stcut import BarrierConfig, Problem


@pytest.fixture
def k2():
    return Problem([[0, 5], [5, 0]], s=0, t=1, alpha=0.0)


@pytest.fixture
def k3():
    return Problem(np.ones((3, 3)) - np.eye(3), s=0, t=1, alpha=0.0)


@pytest.fixture
def unit_box():
    return BarrierConfig(p=1.0, q=1.0)


def random_problem(rng, n, weight_max=50, alpha=1e-6):
    W = np.triu(rng.integers(0, weight_max + 1, size=(n, n)).astype(float), 1)
    s, t = rng.choice(n, size=2, replace=False)
    return Problem(W + W.T, s=int(s), t=int(t), alpha=alpha)


def random_feasible_interior(rng, problem, config, spread=0.95):
    x = rng.uniform(-spread, spread, size=problem.n) * config.half_width
    x[problem.t] = -x[problem.s]
    return x


@st.composite
def problems(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_problem(np.random.default_rng(seed), n)


_CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(tag, ok, detail)``; returns ``ok``."""

    def record(tag, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] {tag}: {detail}"
        _CRITERIA.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
