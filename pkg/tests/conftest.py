import numpy as np
import pytest

from staggered_xy.entanglement import XState


def random_xstate(rng) -> XState:
    a1, a2, a3, a4 = rng.dirichlet(np.ones(4))
    b1 = rng.uniform(-1, 1) * np.sqrt(a1 * a4)
    b2 = rng.uniform(-1, 1) * np.sqrt(a2 * a3)
    return XState(a1, a2, a3, a4, b1, b2)


def random_hermitian(rng, dim: int) -> np.ndarray:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (m + m.conj().T) / 2


def random_density(rng, n_sites: int) -> np.ndarray:
    dim = 2**n_sites
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
