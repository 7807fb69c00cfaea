# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import DISTANCE_SLACK
from twoqubit.core.exceptions import ValidationError


def distance_markovian(trajectory, slack=DISTANCE_SLACK):
    """Whether |n(t_k) - n_inf| never increases by more than ``slack``

    Returns the flag together with the largest single-step increase.
    """
    distances = trajectory.distances()
    if distances is None:
        raise ValidationError("Distance-Markovianity needs the states and n_infinity")
    if len(distances) < 2:
        return True, 0.0
    violation = float(max(np.max(np.diff(distances)), 0.0))
    return violation <= slack, violation
