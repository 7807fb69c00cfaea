# Standard Library
from dataclasses import dataclass, field
from typing import Callable, Optional

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import ValidationError
from twoqubit.core.utils import read_csv, write_csv

# Local
from .polarization import DIMENSION

CSV_HEADER = ["t"] + [f"n_{i}" for i in range(1, DIMENSION + 1)] + ["C"]


@dataclass(eq=False)
class Trajectory:
    """Samples (t_k, n(t_k), C(t_k)) of one evolution plus its limiting state

    ``states`` may be absent for concurrence-only input. ``signed_amplitude`` is an
    optional vectorized continuous function of t whose sign changes are exactly the isolated
    zeros of C; it locates zeros that fall between samples.
    """

    times: np.ndarray
    concurrence: np.ndarray
    states: Optional[np.ndarray] = None
    n_infinity: Optional[np.ndarray] = None
    model: str = ""
    params: dict = field(default_factory=dict)
    signed_amplitude: Optional[Callable[[float], float]] = field(default=None, repr=False)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.concurrence = np.asarray(self.concurrence, dtype=float)
        if self.times.ndim != 1 or self.times.shape != self.concurrence.shape:
            raise ValidationError("Times and concurrences must be 1-d arrays of equal length")
        if self.states is not None:
            self.states = np.asarray(self.states, dtype=float)
            if self.states.shape != (len(self.times), DIMENSION):
                raise ValidationError(
                    f"States must have shape ({len(self.times)}, {DIMENSION}), "
                    f"got {self.states.shape}"
                )
        if self.n_infinity is not None:
            self.n_infinity = np.asarray(self.n_infinity, dtype=float)
            if self.n_infinity.shape != (DIMENSION,):
                raise ValidationError(f"n_infinity must have {DIMENSION} components")

    def __len__(self):
        return len(self.times)

    @property
    def horizon(self):
        return float(self.times[-1])

    def distances(self):
        """|n(t_k) - n_inf|, or None when either is unknown"""
        if self.states is None or self.n_infinity is None:
            return None
        return np.linalg.norm(self.states - self.n_infinity, axis=1)


def trajectory_rows(trajectory):
    """Rows t, n_1..n_15, C in the order of CSV_HEADER"""
    if trajectory.states is None:
        raise ValidationError("Only trajectories with states can be written")
    return (
        [time, *state, value]
        for time, state, value in zip(
            trajectory.times, trajectory.states, trajectory.concurrence
        )
    )


def write_trajectory(path, trajectory, info):
    write_csv(path, CSV_HEADER, trajectory_rows(trajectory), info)


def read_trajectory(path, n_infinity=None):
    """Read t, [n_1..n_15,] C columns; the state columns are optional"""
    header, rows = read_csv(path)
    if "t" not in header or "C" not in header:
        raise ValidationError(f"{path}: trajectory files need 't' and 'C' columns")
    try:
        data = np.array([[float(value) for value in row] for row in rows], dtype=float)
    except ValueError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
    if data.ndim != 2 or data.shape[1] != len(header):
        raise ValidationError(f"{path}: ragged or empty trajectory table")
    columns = {name: index for index, name in enumerate(header)}
    state_names = CSV_HEADER[1:-1]
    states = None
    if all(name in columns for name in state_names):
        states = data[:, [columns[name] for name in state_names]]
    return Trajectory(
        times=data[:, columns["t"]],
        concurrence=data[:, columns["C"]],
        states=states,
        n_infinity=n_infinity,
    )
