"""Evolution categories and their prediction from the dynamical subspace

The zero set T0 = {t | C(t) = 0} of an evolution is empty (Approaching), a set of
discrete points (Bouncing), a single trailing interval (Entering) or a union of
disjoint intervals (Oscillating).
"""

# Standard Library
import enum
import logging
from dataclasses import dataclass
from typing import Optional

# TwoQubit
from twoqubit.channels.markov import distance_markovian
from twoqubit.core.constants import CONCURRENCE_TOL, DISTANCE_SLACK, POINT_WIDTH
from twoqubit.dynamics.subspace import NInfinityLocation

# Local
from .zeroset import zero_set

logger = logging.getLogger(__name__)


class EvolutionCategory(enum.Enum):
    APPROACHING = "A"
    BOUNCING = "B"
    ENTERING = "E"
    OSCILLATING = "O"

    @property
    def label(self):
        return self.name.capitalize()


A, B, E, O = EvolutionCategory  # noqa: E741

# (location of n_inf, dim(D cap S) == dim(D)) -> categories admitted
CATEGORY_TABLE = {
    (NInfinityLocation.INTERIOR_S, True): frozenset({E, O}),
    (NInfinityLocation.INTERIOR_S, False): frozenset({A, B}),
    (NInfinityLocation.BOUNDARY_S, True): frozenset({A, B, E, O}),
    (NInfinityLocation.BOUNDARY_S, False): frozenset({A, B}),
}
MARKOVIAN = frozenset({A, E})
NON_MARKOVIAN = frozenset({B, O})


def categorize(zeros):
    """Category of the sampled zero set

    A category is returned even when ``zeros.horizon_undecided`` is set; it then
    describes the window sampled and may change on a longer horizon.
    """
    intervals = zeros.intervals
    if not intervals:
        return A
    if all(interval.point for interval in intervals) and not zeros.tail_is_zero:
        return B
    if len(intervals) == 1 and not intervals[0].point and zeros.tail_is_zero:
        return E
    return O


def sorted_values(categories):
    return sorted(category.value for category in categories)


@dataclass(frozen=True)
class CategoryPrediction:
    """Categories admitted for a subspace

    ``cell`` is the bound set by the subspace dimensions and the location of n_inf;
    ``allowed`` narrows it to what distance-Markovian (or non-Markovian) evolutions
    typically show. ``warning`` is set when that narrowing left nothing.
    """

    allowed: frozenset
    cell: frozenset
    warning: bool = False

    def __contains__(self, category):
        return category in self.allowed

    def as_dict(self):
        return {
            "allowed": sorted_values(self.allowed),
            "cell": sorted_values(self.cell),
            "warning": self.warning,
        }


def predict_categories(meta, distance_markovian):
    cell = CATEGORY_TABLE[meta.location, meta.dimensions_equal]
    allowed = cell & (MARKOVIAN if distance_markovian else NON_MARKOVIAN)
    if not allowed:
        logger.warning(
            "No category in %s is typical for a %s evolution, keeping the full cell",
            sorted_values(cell),
            "distance-Markovian" if distance_markovian else "non-Markovian",
        )
        return CategoryPrediction(allowed=cell, cell=cell, warning=True)
    return CategoryPrediction(allowed=allowed, cell=cell)


@dataclass(frozen=True)
class Classification:
    category: EvolutionCategory
    zeros: object
    distance_markovian: Optional[bool] = None
    violation: Optional[float] = None
    prediction: Optional[CategoryPrediction] = None
    meta: Optional[object] = None

    @property
    def consistent(self):
        """Whether the category lies inside the predicted cell, None when unknown"""
        if self.prediction is None:
            return None
        return self.category in self.prediction.cell

    def as_dict(self):
        return {
            "category": self.category.value,
            **self.zeros.as_dict(),
            "distance_markovian": self.distance_markovian,
            "markovian_violation": self.violation,
            "prediction": None if self.prediction is None else self.prediction.as_dict(),
            "subspace": None if self.meta is None else self.meta.as_dict(),
        }


def classify(
    trajectory,
    meta=None,
    tol_c=CONCURRENCE_TOL,
    point_width=POINT_WIDTH,
    slack=DISTANCE_SLACK,
):
    """Category of a trajectory, with its Markovianity and predicted categories

    Markovianity needs the states and n_inf; the prediction also needs ``meta``.
    """
    zeros = zero_set(trajectory, tol_c=tol_c, point_width=point_width)
    category = categorize(zeros)
    markovian = violation = prediction = None
    if trajectory.distances() is not None:
        markovian, violation = distance_markovian(trajectory, slack=slack)
        if meta is not None:
            prediction = predict_categories(meta, markovian)
    return Classification(
        category=category,
        zeros=zeros,
        distance_markovian=markovian,
        violation=violation,
        prediction=prediction,
        meta=meta,
    )
