# Standard Library
from dataclasses import dataclass
from typing import Callable

# TwoQubit
from twoqubit.core.constants import DECAY_DEPTH
from twoqubit.core.exceptions import DomainError

# Local
from .d3 import d3_family, d3_times, d3_trajectory
from .params import D3Params, YEParams, ZJParams, build_params, parameter_names
from .subspace import subspace_meta
from .ye import ye_family, ye_times, ye_trajectory
from .zj import zj_family, zj_times, zj_trajectory


@dataclass(frozen=True)
class Model:
    name: str
    params_class: type
    times: Callable
    trajectory: Callable
    family: Callable

    def params(self, values=None, base=None):
        return build_params(self.params_class, values, base)

    def parameter_names(self):
        return parameter_names(self.params_class)

    def meta(self, params):
        return subspace_meta(self.name, params)

    def build(self, params, samples, depth=DECAY_DEPTH):
        return self.trajectory(params, self.times(params, samples, depth=depth))


MODELS = {
    "d3": Model("d3", D3Params, d3_times, d3_trajectory, d3_family),
    "ye": Model("ye", YEParams, ye_times, ye_trajectory, ye_family),
    "zj": Model("zj", ZJParams, zj_times, zj_trajectory, zj_family),
}


def get_model(name):
    try:
        return MODELS[str(name).lower()]
    except KeyError:
        raise DomainError(
            f"Unknown model {name!r}, expected one of {', '.join(MODELS)}"
        ) from None


def build_trajectory(name, values=None, samples=2000, depth=DECAY_DEPTH):
    """Parameters, trajectory and subspace metadata of a model run"""
    model = get_model(name)
    params = model.params(values)
    return params, model.build(params, samples, depth=depth), model.meta(params)
