# Third Party
import factory
import numpy as np

# TwoQubit
from twoqubit.states.trajectory import Trajectory


class TrajectoryFactory(factory.Factory):
    """Concurrence-only trajectory decaying from 1 towards 0"""

    times = factory.LazyFunction(lambda: np.linspace(0.0, 10.0, 101))
    concurrence = factory.LazyAttribute(lambda obj: np.exp(-obj.times))
    states = None
    n_infinity = None
    model = "test"

    class Meta:
        model = Trajectory


def werner_psi(r):
    """Werner state r |Psi-><Psi-| + (1 - r) I / 4"""
    n = np.zeros(15)
    n[[4, 9, 14]] = -r
    return n


def bell_phi_plus():
    n = np.zeros(15)
    n[[4, 9, 14]] = [1.0, -1.0, 1.0]
    return n
