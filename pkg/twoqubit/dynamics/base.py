# Third Party
import numpy as np

# TwoQubit
from twoqubit.algebra.generators import GeneratorIndex
from twoqubit.core.constants import POSITIVITY_TOL
from twoqubit.core.exceptions import ConsistencyError
from twoqubit.states.polarization import DIMENSION
from twoqubit.states.positivity import is_physical


def component(label):
    """Zero-based position of a generator label in a polarization vector"""
    return GeneratorIndex[label] - 1


def vector(**components):
    """Polarization vector from keyword components, e.g. vector(XX=1, YY=-1)"""
    n = np.zeros(DIMENSION)
    for label, value in components.items():
        n[component(label)] = value
    return n


def check_physical(states, model, tol=POSITIVITY_TOL):
    physical = is_physical(states, tol)
    if not np.all(physical):
        index = int(np.argmin(physical))
        raise ConsistencyError(f"{model} trajectory leaves the state space at sample {index}")
