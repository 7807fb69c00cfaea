# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.channels.maps import (
    AffineMap,
    KrausMap,
    MapFamily,
    affine_apply,
    affine_compose,
    check_semigroup,
    extended_product_map,
    identity_map,
    kraus_apply,
    kraus_to_affine,
    max_semigroup_residual,
    semigroup_residual,
)
from twoqubit.core.exceptions import ConsistencyError, DomainError, ValidationError
from twoqubit.dynamics.params import YEParams
from twoqubit.dynamics.ye import ye_family, ye_kraus, ye_map
from twoqubit.states.polarization import to_density, to_polarization
from twoqubit.states.pure import haar_pure_states


@pytest.fixture
def states():
    return haar_pure_states(20, np.random.default_rng(5))


def test_identity(states):
    assert np.allclose(affine_apply(identity_map(), states), states)


def test_apply_single_vector(states):
    affine = ye_map(YEParams(), 0.4)
    assert np.allclose(affine.apply(states[0]), affine.apply(states)[0])


def test_affine_shape():
    with pytest.raises(ValidationError):
        AffineMap(T=np.eye(3), m=np.zeros(3))


def test_from_dict():
    affine = AffineMap.from_dict({"T": np.eye(15), "m": np.zeros(15), "t": 2})
    assert affine.t == 2.0
    with pytest.raises(ValidationError):
        AffineMap.from_dict({"T": np.eye(15)})


def test_compose(states):
    params = YEParams(Gamma=0.7)
    earlier, later = ye_map(params, 0.3), ye_map(params, 1.1)
    composed = affine_compose(later, earlier)
    assert composed.t == pytest.approx(1.4)
    assert np.allclose(composed.apply(states), later.apply(earlier.apply(states)))


def test_extended_product_of_identities():
    affine = extended_product_map(np.eye(4), np.eye(4))
    assert np.allclose(affine.T, np.eye(15))
    assert np.allclose(affine.m, 0)


@pytest.mark.parametrize("t", [0.0, 0.2, 1.5, 8.0])
def test_kraus_matches_product_map(t):
    params = YEParams(Gamma=1.3)
    affine = kraus_to_affine(ye_kraus(params, t))
    expected = ye_map(params, t)
    assert np.allclose(affine.T, expected.T, atol=1e-12)
    assert np.allclose(affine.m, expected.m, atol=1e-12)


def test_kraus_apply_matches_affine(states):
    kraus = ye_kraus(YEParams(), 0.6)
    affine = kraus_to_affine(kraus)
    for n in states[:5]:
        image = to_polarization(kraus_apply(kraus, to_density(n)))
        assert np.allclose(image, affine.apply(n), atol=1e-12)


def test_incomplete_kraus():
    kraus = KrausMap((np.eye(4) * 0.5,))
    assert kraus.completeness_residual() == pytest.approx(0.75)
    with pytest.raises(ValidationError):
        kraus_to_affine(kraus)


def test_kraus_shape():
    with pytest.raises(ValidationError):
        KrausMap((np.eye(2),))
    with pytest.raises(ValidationError):
        KrausMap(())


def test_singular_values_of_contraction():
    assert np.all(ye_map(YEParams(), 0.5).singular_values() <= 1 + 1e-12)


def test_semigroup_of_amplitude_damping():
    residual_T, residual_m = max_semigroup_residual(ye_family(YEParams(Gamma=0.8)))
    assert residual_T < 1e-10
    assert residual_m < 1e-10


def test_semigroup_violation():
    """A Gaussian decay is not a semigroup"""

    def at(t):
        return AffineMap(T=np.exp(-t ** 2) * np.eye(15), m=np.zeros(15), t=t)

    family = MapFamily(name="gaussian", at=at, unital=True)
    residual_T, residual_m = semigroup_residual(family, 1.0, 1.0)
    assert residual_T == pytest.approx(np.exp(-2) - np.exp(-4))
    assert residual_m == 0
    assert family.is_unital([0.0, 1.0])


def test_semigroup_times():
    with pytest.raises(DomainError):
        semigroup_residual(ye_family(YEParams()), -1.0, 1.0)


def test_amplitude_damping_is_not_unital():
    assert not ye_family(YEParams()).is_unital([1.0])


def gaussian_family(claims_semigroup):
    def at(t):
        return AffineMap(T=np.exp(-t ** 2) * np.eye(15), m=np.zeros(15), t=t)

    return MapFamily(name="gaussian", at=at, unital=True, claims_semigroup=claims_semigroup)


def test_check_semigroup_of_a_claiming_family():
    report = check_semigroup(ye_family(YEParams(Gamma=0.8)))
    assert report.claimed
    assert report.holds
    assert report.as_dict()["family"] == "ye"


def test_check_semigroup_reports_unclaimed_violations():
    report = check_semigroup(gaussian_family(False), grid=[(1.0, 1.0)])
    assert not report.claimed
    assert not report.holds
    assert report.as_dict()["residual_T"] == pytest.approx(np.exp(-2) - np.exp(-4))


def test_check_semigroup_rejects_false_claims():
    with pytest.raises(ConsistencyError):
        check_semigroup(gaussian_family(True), grid=[(1.0, 1.0)])
