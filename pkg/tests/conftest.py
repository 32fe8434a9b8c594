import numpy as np
import pytest

from sautxu.spectral import Grid


def brute_force_dft(u):
    """Direct O(N^2) evaluation of sum_j u_j exp(-2 pi i j k / N)."""
    n = len(u)
    j = np.arange(n)
    return np.exp(-2j * np.pi * np.outer(j, j) / n) @ np.asarray(u, dtype=complex)


def brute_force_idft(U):
    n = len(U)
    k = np.arange(n)
    return np.exp(2j * np.pi * np.outer(k, k) / n) @ np.asarray(U, dtype=complex) / n


def smooth_random_field(grid, rng, n_modes=6, amplitude=1.0):
    """Sum of a few low Fourier modes with random amplitudes and phases."""
    x = np.asarray(grid.nodes)
    xi0 = np.pi / grid.half_length
    u = np.full_like(x, rng.normal())
    for m in range(1, n_modes + 1):
        a, b = rng.normal(size=2) / m
        u += a * np.cos(m * xi0 * x) + b * np.sin(m * xi0 * x)
    return amplitude * u


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_grid():
    # xi = 1 is the 4th wavenumber on [-4 pi, 4 pi)
    return Grid(4 * np.pi, 64)


@pytest.fixture
def example_grid():
    return Grid(30.0, 256)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Print one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def _report(label, passed, detail):
        line = f"{label}: {'PASS' if passed else 'FAIL'} ({detail})"
        print(line)
        lines.append(line)
        assert passed, line

    return _report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
