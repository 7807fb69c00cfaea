# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import DECAY_DEPTH
from twoqubit.core.exceptions import DomainError

# horizon when nothing in the model decays
UNDAMPED_HORIZON = 100.0
# rate spread beyond which the grid gets a geometric tail
SPREAD = 20.0
SAMPLES_PER_PERIOD = 16
MAX_SAMPLES = 200_000
MIN_SAMPLES = 16


def time_grid(rates, samples, depth=DECAY_DEPTH, frequency=0.0):
    """Sample times from 0 until the slowest rate has decayed by exp(-depth)

    Widely separated rates get a uniform grid over the fast scale followed by a
    geometric tail out to the slow one. Oscillations of the given angular frequency
    are resolved on the uniform part.
    """
    if samples < MIN_SAMPLES:
        raise DomainError(f"Trajectories need at least {MIN_SAMPLES} samples, got {samples}")
    rates = [rate for rate in rates if rate > 0]
    if not rates:
        return np.linspace(0.0, UNDAMPED_HORIZON, samples)
    horizon = depth / min(rates)
    if max(rates) / min(rates) <= SPREAD:
        uniform_end, tail = horizon, 0
    else:
        uniform_end, tail = depth / max(rates), samples // 4
    uniform = samples - tail
    if frequency > 0:
        periods = uniform_end * frequency / (2 * np.pi)
        uniform = int(min(max(uniform, np.ceil(periods * SAMPLES_PER_PERIOD)), MAX_SAMPLES))
    times = np.linspace(0.0, uniform_end, uniform)
    if tail:
        times = np.concatenate([times, np.geomspace(uniform_end, horizon, tail + 1)[1:]])
    return times
