# Third Party
import numpy as np
import pytest

# TwoQubit
from twoqubit.core.exceptions import DomainError

# Local
from ..subspace import NInfinityLocation, SubspaceMeta, subspace_meta


def test_d3(d3_params_factory):
    meta = subspace_meta("d3", d3_params_factory(x0=0.6, z0=0.8))
    assert (meta.dim_D, meta.dim_D_cap_S) == (3, 1)
    assert not meta.dimensions_equal
    assert meta.location is NInfinityLocation.BOUNDARY_S
    assert meta.n_infinity[14] == 1


def test_d8():
    meta = subspace_meta("D8")
    assert meta.n_infinity is None
    assert meta.as_dict()["n_infinity"] is None


def test_ye():
    data = subspace_meta("ye").as_dict()
    assert data["dim_D"] == data["dim_D_cap_S"] == 3
    assert data["location"] == "BoundaryS"


@pytest.mark.parametrize(
    "values, location",
    [
        ({"r": 1.0}, NInfinityLocation.BOUNDARY_S),
        ({"r": 0.5}, NInfinityLocation.INTERIOR_S),
        ({"r": 1.0, "Gamma1": 0.2}, NInfinityLocation.INTERIOR_S),
    ],
)
def test_zj(zj_params_factory, values, location):
    meta = subspace_meta("zj", zj_params_factory(**values))
    assert meta.location is location
    assert meta.dimensions_equal


def test_zj_relaxation_limit(zj_params_factory):
    meta = subspace_meta("zj", zj_params_factory(Gamma1=0.2))
    assert np.allclose(meta.n_infinity, 0)


def test_unknown_model():
    with pytest.raises(DomainError):
        subspace_meta("d5")


def test_invalid_dimensions():
    with pytest.raises(DomainError):
        SubspaceMeta(2, 3, None, NInfinityLocation.INTERIOR_S)
