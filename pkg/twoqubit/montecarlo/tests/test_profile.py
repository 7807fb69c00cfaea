# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.core.exceptions import ConfigurationError, DomainError
from twoqubit.montecarlo.profile import (
    BALL_VOLUME,
    MAX_RADIUS,
    RadialProfile,
    radial_profile,
    simpson_weights,
    volume,
    volume_estimate,
    volume_integral,
)


def test_ball_volume():
    assert BALL_VOLUME == pytest.approx(1444.905, rel=1e-6)
    assert MAX_RADIUS == pytest.approx(np.sqrt(3))


def test_simpson_weights():
    weights = simpson_weights(10)
    assert weights.sum() == pytest.approx(1)
    grid = np.linspace(0, 1, 11)
    assert weights @ grid ** 3 == pytest.approx(1 / 4)


def test_simpson_needs_even_steps():
    with pytest.raises(ConfigurationError):
        simpson_weights(11)


def test_full_profile_integrates_to_ball():
    value = volume_integral(np.ones(201))
    assert value.value == pytest.approx(BALL_VOLUME, rel=1e-5)
    assert value.error == 0


def test_volume_error_propagation():
    steps = 10
    estimate = volume_integral(np.full(steps + 1, 0.5), np.full(steps + 1, 0.01))
    assert estimate.error > 0
    assert volume_integral(np.full(steps + 1, 0.5), np.zeros(steps + 1)).error == 0


@pytest.mark.parametrize(
    "kwargs", [{"steps": 8}, {"samples": 999}, {"block_size": 0}]
)
def test_radial_profile_domain(kwargs):
    arguments = {"steps": 10, "samples": 1000, "seed": 1, **kwargs}
    with pytest.raises(DomainError):
        radial_profile(**arguments)


def test_radial_profile():
    profile = radial_profile(steps=10, samples=1000, seed=11, block_size=500)
    assert profile.steps == 10
    assert profile.radii[-1] == pytest.approx(MAX_RADIUS)
    # the inscribed ball |n| <= 1/sqrt(3) covers the first three radii
    assert np.all(profile.p_phys[:4] == 1)
    assert np.all(profile.p_sep[:4] == 1)
    assert np.all(profile.p_sep <= profile.p_phys)
    assert profile.p_phys[-1] == 0
    assert np.all(profile.p_phys_err[:4] == 0)


def test_radial_profile_is_reproducible():
    first = radial_profile(steps=10, samples=1000, seed=3)
    second = radial_profile(steps=10, samples=1000, seed=3)
    assert np.array_equal(first.p_phys, second.p_phys)
    assert np.array_equal(first.p_sep, second.p_sep)


def test_unknown_volume():
    profile = RadialProfile(np.zeros(11), np.zeros(11), np.zeros(11), 1000, 1)
    with pytest.raises(DomainError):
        volume(profile, "entangled")


def test_empty_profile_has_no_ratio():
    profile = RadialProfile(np.zeros(11), np.zeros(11), np.zeros(11), 1000, 1)
    estimate = volume_estimate(profile)
    assert estimate.V_phys.value == 0
    assert np.isnan(estimate.ratio.value)


@pytest.mark.slow
def test_volumes():
    """Separable states fill about a quarter of the physical volume"""
    estimate = volume_estimate(radial_profile(steps=50, samples=50_000, seed=20111))
    assert estimate.V_phys.value == pytest.approx(0.0370, rel=0.15)
    assert estimate.V_sep.value == pytest.approx(0.00897, rel=0.2)
    assert estimate.ratio.value == pytest.approx(0.2424, abs=0.06)
    assert set(estimate.as_dict()["errors"]) == {"V_phys", "V_sep", "ratio"}
