"""Zero set of the concurrence along a sampled trajectory

A sample counts as zero when C_k <= tol_c min(1, e_k / d_0), with d_k = |n(t_k) - n_inf|
and e_k = max_{j >= k} d_j, so concurrences that only shrink together with the
distance to n_inf are not mistaken for zeros. Isolated zeros falling between samples
are located on the trajectory's signed amplitude, or from a two-sided linear
extrapolation of C when no such function is known.
"""

# Standard Library
import logging
import math
from dataclasses import dataclass

# Third Party
import numpy as np
from scipy.optimize import brentq

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POINT_WIDTH
from twoqubit.core.exceptions import ValidationError

logger = logging.getLogger(__name__)

MIN_SAMPLES = 16
# |n(t_max) - n_inf| must have shrunk below this fraction of |n(0) - n_inf|
CONVERGENCE_FRACTION = 0.05
# a trailing zero run needs max(MIN_TAIL, TAIL_FRACTION N) samples
MIN_TAIL = 5
TAIL_FRACTION = 0.05
# extrapolated minima below this fraction of the neighbouring values are zeros
V_SHAPE_FRACTION = 1e-3


@dataclass(frozen=True)
class ZeroInterval:
    start: float
    end: float
    point: bool
    first: int
    last: int

    def as_dict(self):
        return {"start": self.start, "end": self.end, "point": self.point}


@dataclass(frozen=True)
class ZeroSet:
    intervals: tuple
    horizon: float
    tail_is_zero: bool
    horizon_undecided: bool = False

    def __len__(self):
        return len(self.intervals)

    @property
    def empty(self):
        return not self.intervals

    def as_dict(self):
        return {
            "intervals": [interval.as_dict() for interval in self.intervals],
            "horizon": self.horizon,
            "tail_is_zero": self.tail_is_zero,
            "horizon_undecided": self.horizon_undecided,
        }


def zero_thresholds(trajectory, tol_c):
    distances = trajectory.distances()
    if distances is None or distances[0] <= 0:
        return np.full(len(trajectory), tol_c)
    envelope = np.maximum.accumulate(distances[::-1])[::-1]
    return tol_c * np.minimum(1.0, envelope / distances[0])


def zero_runs(mask):
    """(first, last) index pairs of the maximal runs of True"""
    padded = np.concatenate([[False], mask, [False]]).astype(int)
    edges = np.flatnonzero(np.diff(padded))
    return list(zip(edges[::2], edges[1::2] - 1))


def amplitude_zeros(trajectory, mask):
    """Roots of the signed amplitude between two non-zero samples"""
    function = trajectory.signed_amplitude
    times = trajectory.times
    values = np.asarray(function(times), dtype=float)
    zeros = []
    for k in np.flatnonzero(values[:-1] * values[1:] < 0):
        if mask[k] or mask[k + 1]:
            continue
        root = brentq(lambda t: float(function(t)), times[k], times[k + 1])
        zeros.append((root, k))
    return zeros


def extrapolated_zeros(trajectory, mask, tol_c):
    """Local minima whose extrapolated V reaches zero

    Lines through the two samples on each side of a minimum are intersected; the
    minimum is a zero when the intersection value is negligible against the
    neighbouring concurrences.
    """
    times, values = trajectory.times, trajectory.concurrence
    zeros = []
    for k in range(2, len(times) - 2):
        if mask[k - 2 : k + 3].any():
            continue
        if not (values[k] <= values[k - 1] and values[k] < values[k + 1]):
            continue
        left = (values[k - 1] - values[k - 2]) / (times[k - 1] - times[k - 2])
        right = (values[k + 2] - values[k + 1]) / (times[k + 2] - times[k + 1])
        if not left < 0 < right:
            continue
        root = (
            values[k + 1] - values[k - 1] + left * times[k - 1] - right * times[k + 1]
        ) / (left - right)
        bottom = values[k - 1] + left * (root - times[k - 1])
        if bottom <= max(tol_c, V_SHAPE_FRACTION * max(values[k - 2], values[k + 2])):
            zeros.append((float(np.clip(root, times[k - 1], times[k + 1])), k))
    return zeros


def horizon_undecided(trajectory, runs, tail_is_zero):
    distances = trajectory.distances()
    if distances is None:
        return True
    if distances[-1] > CONVERGENCE_FRACTION * distances[0]:
        return True
    if tail_is_zero:
        first, last = runs[-1]
        return last - first + 1 < max(MIN_TAIL, math.ceil(TAIL_FRACTION * len(trajectory)))
    return False


def zero_set(trajectory, tol_c=CONCURRENCE_TOL, point_width=POINT_WIDTH):
    if len(trajectory) < MIN_SAMPLES:
        raise ValidationError(
            f"Zero sets need at least {MIN_SAMPLES} samples, got {len(trajectory)}"
        )
    times = trajectory.times
    if np.any(np.diff(times) <= 0):
        raise ValidationError("Trajectory times must be strictly increasing")

    mask = trajectory.concurrence <= zero_thresholds(trajectory, tol_c)
    runs = zero_runs(mask)
    intervals = [
        ZeroInterval(
            float(times[first]), float(times[last]), last - first <= point_width, first, last
        )
        for first, last in runs
    ]
    if trajectory.signed_amplitude is not None:
        isolated = amplitude_zeros(trajectory, mask)
    else:
        isolated = extrapolated_zeros(trajectory, mask, tol_c)
    intervals.extend(ZeroInterval(root, root, True, k, k) for root, k in isolated)
    intervals.sort(key=lambda interval: interval.start)

    tail_is_zero = bool(mask[-1])
    undecided = horizon_undecided(trajectory, runs, tail_is_zero)
    if undecided:
        logger.info("Horizon of the %s trajectory does not settle its zero set", trajectory.model or "input")
    return ZeroSet(
        intervals=tuple(intervals),
        horizon=trajectory.horizon,
        tail_is_zero=tail_is_zero,
        horizon_undecided=undecided,
    )
