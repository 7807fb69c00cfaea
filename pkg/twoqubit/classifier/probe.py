# Standard Library
import enum

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import DomainError
from twoqubit.states.concurrence import concurrence, concurrence_values
from twoqubit.states.polarization import as_vector
from twoqubit.states.pure import haar_pure_states

MIN_PROBES = 16


class ProbeResult(enum.Enum):
    INTERIOR_S = "InteriorS"
    BOUNDARY_S = "BoundaryS"
    NOT_SEPARABLE = "NotSeparable"


def boundary_probe(n, eps=1e-3, probes=64, rng=None, tol_c=CONCURRENCE_TOL, tol=POSITIVITY_TOL):
    """Locate a state relative to the separable set

    The probes step a distance ``eps`` from n towards Haar-random pure states, so
    every perturbed state is a mixture of physical states. Any entangled probe puts n
    on the boundary.
    """
    if eps <= 0:
        raise DomainError(f"Probe distance must be positive, got {eps}")
    if probes < MIN_PROBES:
        raise DomainError(f"At least {MIN_PROBES} probes are needed, got {probes}")
    n = as_vector(n)
    if concurrence(n, tol=tol).C > tol_c:
        return ProbeResult.NOT_SEPARABLE
    rng = rng if rng is not None else np.random.default_rng()
    targets = haar_pure_states(probes, rng)
    offsets = targets - n
    lengths = np.linalg.norm(offsets, axis=1, keepdims=True)
    steps = np.minimum(eps, lengths) * offsets / np.where(lengths > 0, lengths, 1.0)
    if np.any(concurrence_values(n + steps) > tol_c):
        return ProbeResult.BOUNDARY_S
    return ProbeResult.INTERIOR_S
