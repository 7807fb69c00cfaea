"""Distribution of the concurrence over physical states at a fixed radius"""

# Standard Library
import logging
from dataclasses import dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import DomainError
from twoqubit.states.concurrence import concurrence_values
from twoqubit.states.polarization import DIMENSION
from twoqubit.states.positivity import is_physical
from twoqubit.states.pure import haar_pure_states

# Local
from .profile import DEFAULT_BLOCK_SIZE, MAX_RADIUS
from .sampling import block_sizes, sample_sphere, substream

logger = logging.getLogger(__name__)

# substream key separating histogram draws from radial profile draws
HISTOGRAM_STREAM = 1
SHELL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ConcurrenceHistogram:
    radius: float
    edges: np.ndarray
    probabilities: np.ndarray
    physical: int
    samples: int
    p_zero: float
    pure_shell: bool

    @property
    def status(self):
        return "ok" if self.physical else "empty"

    def rows(self):
        return zip(self.edges[:-1], self.edges[1:], self.probabilities)


def concurrence_histogram(
    radius,
    samples,
    bins,
    seed,
    tol=POSITIVITY_TOL,
    tol_c=CONCURRENCE_TOL,
    block_size=DEFAULT_BLOCK_SIZE,
):
    """Normalized histogram of C over the physical samples at |n| = radius

    Sphere samples at radius sqrt(3) are never physical, so the pure-state shell is
    sampled with Haar-random kets instead.
    """
    if not 0 < radius <= MAX_RADIUS + SHELL_TOL:
        raise DomainError(f"Radius must lie in (0, sqrt(3)], got {radius}")
    if samples < 1 or bins < 1:
        raise DomainError("Samples and bins must be positive")
    pure_shell = radius >= MAX_RADIUS - SHELL_TOL
    radius_key = int(np.float64(radius).view(np.uint64))
    counts = np.zeros(bins, dtype=np.int64)
    physical = zeros = 0
    for block, size in enumerate(block_sizes(samples, block_size)):
        rng = substream(seed, HISTOGRAM_STREAM, radius_key, block)
        if pure_shell:
            points = haar_pure_states(size, rng)
        else:
            points = sample_sphere(DIMENSION, radius, rng, size)
            points = points[is_physical(points, tol)]
        if not len(points):
            continue
        values = np.clip(concurrence_values(points), 0.0, 1.0)
        counts += np.histogram(values, bins=bins, range=(0.0, 1.0))[0]
        physical += len(points)
        zeros += int((values <= tol_c).sum())
    edges = np.linspace(0.0, 1.0, bins + 1)
    if physical:
        probabilities = counts / physical
        p_zero = zeros / physical
    else:
        logger.warning("No physical samples at radius %.6g in %d draws", radius, samples)
        probabilities = np.zeros(bins)
        p_zero = float("nan")
    return ConcurrenceHistogram(
        radius=float(radius),
        edges=edges,
        probabilities=probabilities,
        physical=physical,
        samples=samples,
        p_zero=p_zero,
        pure_shell=pure_shell,
    )
