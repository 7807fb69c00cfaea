# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.states.concurrence import concurrence_values
from twoqubit.states.positivity import is_physical

# Local
from ..base import vector
from ..params import Dephasing, WernerFamily
from ..zj import (
    dz_concurrence,
    dz_positivity,
    zj_coordinates,
    zj_dephasing,
    zj_family,
    zj_map,
    zj_n_infinity,
    zj_states,
    zj_times,
    zj_trajectory,
)

PARAMETER_SETS = [
    {},
    {"family": WernerFamily.PSI, "phi": 0.4},
    {"r": 0.8, "Gamma1": 0.3, "g": 0.5, "gamma": 0.1},
    {
        "r": 0.6,
        "Gamma1": 0.2,
        "relaxation_dephasing": False,
        "dephasing": Dephasing.EXPONENTIAL,
        "phi": 1.1,
    },
    {"dephasing": Dephasing.EXPONENTIAL, "Gamma2": 0.7, "family": WernerFamily.PSI, "B0": 0.5},
]


@pytest.mark.parametrize("values", PARAMETER_SETS)
def test_concurrence_matches_wootters(zj_params_factory, values):
    params = zj_params_factory(**values)
    trajectory = zj_trajectory(params, np.linspace(0, 30, 60))
    expected = concurrence_values(trajectory.states)
    assert np.allclose(trajectory.concurrence, expected, rtol=0, atol=1e-9)


def test_concurrence_matches_wootters_for_random_parameters(zj_params_factory):
    rng = np.random.default_rng(23)
    for _ in range(100):
        params = zj_params_factory(
            r=rng.uniform(0.01, 1),
            phi=rng.uniform(0, 2 * np.pi),
            B0=rng.uniform(0, 2),
            Gamma1=rng.choice([0.0, rng.uniform(0, 0.3)]),
            dephasing=list(Dephasing)[rng.integers(2)],
            g=rng.uniform(0, 2),
            gamma=rng.uniform(0, 2),
            Gamma2=rng.uniform(0, 2),
            family=list(WernerFamily)[rng.integers(2)],
        )
        trajectory = zj_trajectory(params, np.sort(rng.uniform(0, 30, 10)))
        expected = concurrence_values(trajectory.states)
        assert np.allclose(trajectory.concurrence, expected, rtol=0, atol=1e-9), params


@pytest.mark.parametrize("values", PARAMETER_SETS)
def test_map_reproduces_states(zj_params_factory, values):
    params = zj_params_factory(**values)
    initial = zj_states(params, *zj_coordinates(params, 0.0))
    for t in (0.4, 3.0, 15.0):
        state = zj_states(params, *zj_coordinates(params, t))
        assert np.allclose(zj_map(params, t).apply(initial), state)


def test_family_is_unital(zj_params_factory):
    family = zj_family(zj_params_factory(Gamma1=0.5))
    assert family.unital
    assert family.is_unital([0.1, 1.0, 10.0])


def test_positivity_region():
    radius = np.array([0.0, 0.5, 1.0, 0.9])
    n_zz = np.array([0.0, 0.0, 1.0, -1.0])
    assert list(dz_positivity(radius, 0.0, n_zz)) == [True, True, False, True]
    assert not dz_positivity(0.0, 0.0, -1.5)


def test_positivity_agrees_with_full_test(zj_params_factory):
    params = zj_params_factory(family=WernerFamily.PSI)
    rng = np.random.default_rng(12)
    x, y, z = rng.uniform(-1, 1, (3, 500))
    assert np.array_equal(dz_positivity(x, y, z), is_physical(zj_states(params, x, y, z)))


def test_concurrence_formula():
    assert dz_concurrence(1.0, 0.0, -1.0) == 1
    assert dz_concurrence(0.25, 0.0, 0.0) == 0


def test_dephasing_includes_relaxation(zj_params_factory):
    params = zj_params_factory(Gamma1=0.4, dephasing=Dephasing.EXPONENTIAL, Gamma2=1.0)
    assert zj_dephasing(params, 2.0) == pytest.approx(np.exp(-2.0 - 0.4))
    params = zj_params_factory(
        Gamma1=0.4, dephasing=Dephasing.EXPONENTIAL, Gamma2=1.0, relaxation_dephasing=False
    )
    assert zj_dephasing(params, 2.0) == pytest.approx(np.exp(-2.0))


def test_limit_state(zj_params_factory):
    assert np.allclose(zj_n_infinity(zj_params_factory()), vector(ZZ=0.5))
    assert np.allclose(zj_n_infinity(zj_params_factory(family=WernerFamily.PSI)), vector(ZZ=-0.5))
    assert not zj_n_infinity(zj_params_factory(Gamma1=0.1)).any()


def test_pure_werner_state_has_signed_amplitude(zj_params_factory):
    params = zj_params_factory(r=1.0, g=0.5, gamma=0.1)
    trajectory = zj_trajectory(params, zj_times(params, 200))
    assert trajectory.signed_amplitude is not None
    assert np.allclose(
        np.abs(trajectory.signed_amplitude(trajectory.times)), trajectory.concurrence, atol=1e-12
    )
    assert zj_trajectory(zj_params_factory(), [0.0, 1.0]).signed_amplitude is None


def test_sudden_death_of_mixed_werner_state(zj_params):
    trajectory = zj_trajectory(zj_params, zj_times(zj_params, 500))
    assert trajectory.concurrence[0] == pytest.approx(0.25)
    assert trajectory.concurrence[-1] == 0
