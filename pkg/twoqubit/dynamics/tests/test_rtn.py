# Third Party
import numpy as np
import pytest

# Local
from ..rtn import d3_zeta, exponential_zeta, is_critical, zeta_decay_rate, zeta_frequency


@pytest.mark.parametrize("g, gamma", [(0.5, 1.0), (0.5, 0.1), (1.0, 1.0), (0.0, 0.0)])
def test_zeta_starts_at_one_with_zero_slope(g, gamma):
    assert d3_zeta(0.0, g, gamma) == pytest.approx(1)
    h = 1e-6
    assert (d3_zeta(h, g, gamma) - 1) / h == pytest.approx(0, abs=1e-5)


def test_oscillating_branch():
    t = np.array([0.3, 2.0, 7.5])
    omega = np.sqrt(0.5 ** 2 - 0.1 ** 2)
    expected = np.exp(-0.1 * t) * (np.cos(omega * t) + 0.1 / omega * np.sin(omega * t))
    assert np.allclose(d3_zeta(t, 0.5, 0.1), expected)
    assert np.any(d3_zeta(np.linspace(0, 30, 300), 0.5, 0.1) < 0)


def test_hyperbolic_branch_is_monotonic():
    zeta = d3_zeta(np.linspace(0, 50, 500), 0.5, 1.0)
    assert np.all(np.diff(zeta) < 0)
    assert np.all(zeta > 0)


def test_hyperbolic_branch_has_no_overflow():
    assert np.isfinite(d3_zeta(1e4, 0.1, 1.0))


def test_critical_branch_is_continuous():
    t = np.linspace(0, 10, 11)
    assert is_critical(1.0, 1.0 + 1e-10)
    assert np.allclose(d3_zeta(t, 1.0, 1.0), d3_zeta(t, 1.0 - 1e-5, 1.0), atol=1e-4)


def test_rates():
    assert zeta_decay_rate(0.5, 0.1) == 0.1
    assert zeta_decay_rate(0.5, 1.0) == pytest.approx(1 - np.sqrt(0.75))
    assert zeta_frequency(0.5, 0.1) == pytest.approx(np.sqrt(0.24))
    assert zeta_frequency(0.5, 1.0) == 0


def test_exponential():
    assert exponential_zeta(2.0, 0.5) == pytest.approx(np.exp(-1))
