"""Dynamical subspaces of the built-in models

D is the image of the linear part of the map family, and the category of an
evolution is constrained by dim(D), dim(D cap S) and where n_inf sits relative to S.
"""

# Standard Library
import enum
from dataclasses import dataclass
from typing import Optional

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import DomainError

# Local
from .d3 import effective_state
from .params import D3Params, ZJParams
from .ye import N_INFINITY as YE_N_INFINITY
from .zj import zj_n_infinity


class NInfinityLocation(enum.Enum):
    INTERIOR_S = "InteriorS"
    BOUNDARY_S = "BoundaryS"


@dataclass(frozen=True, eq=False)
class SubspaceMeta:
    dim_D: int
    dim_D_cap_S: int
    n_infinity: Optional[np.ndarray]
    location: NInfinityLocation

    def __post_init__(self):
        if not self.dim_D_cap_S <= self.dim_D <= 15:
            raise DomainError(f"Invalid subspace dimensions {self.dim_D_cap_S} <= {self.dim_D}")

    @property
    def dimensions_equal(self):
        return self.dim_D_cap_S == self.dim_D

    def as_dict(self):
        return {
            "dim_D": self.dim_D,
            "dim_D_cap_S": self.dim_D_cap_S,
            "n_infinity": None if self.n_infinity is None else self.n_infinity.tolist(),
            "location": self.location.value,
        }


def subspace_meta(model, params=None):
    """Hard-coded subspace data for d3, d8, ye and zj

    d8 has no single limiting state, so its n_infinity is None.
    """
    model = str(model).lower()
    if model == "d3":
        params = params or D3Params()
        return SubspaceMeta(
            3, 1, effective_state(0.0, 0.0, params.z0), NInfinityLocation.BOUNDARY_S
        )
    if model == "d8":
        return SubspaceMeta(8, 7, None, NInfinityLocation.BOUNDARY_S)
    if model == "ye":
        return SubspaceMeta(3, 3, YE_N_INFINITY.copy(), NInfinityLocation.BOUNDARY_S)
    if model == "zj":
        params = params or ZJParams()
        if params.Gamma1 == 0 and params.r == 1:
            location = NInfinityLocation.BOUNDARY_S
        else:
            location = NInfinityLocation.INTERIOR_S
        return SubspaceMeta(3, 3, zj_n_infinity(params), location)
    raise DomainError(f"Unknown model {model!r}")
