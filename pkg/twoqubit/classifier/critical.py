"""Scans of a model parameter for changes of the evolution category"""

# Standard Library
import logging
from dataclasses import dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, CRITICAL_TOL, DECAY_DEPTH, POINT_WIDTH
from twoqubit.core.exceptions import DomainError
from twoqubit.dynamics.registry import get_model

# Local
from .categories import categorize
from .zeroset import zero_set

logger = logging.getLogger(__name__)

MIN_STEPS = 3


@dataclass(frozen=True)
class CriticalBracket:
    low: float
    high: float
    low_category: object
    high_category: object

    @property
    def value(self):
        return (self.low + self.high) / 2

    def as_dict(self):
        return {
            "value": self.value,
            "low": self.low,
            "high": self.high,
            "low_category": self.low_category.value,
            "high_category": self.high_category.value,
        }


@dataclass(frozen=True)
class CriticalScan:
    model: str
    parameter: str
    values: tuple
    categories: tuple
    brackets: tuple
    undecided: tuple = ()

    @property
    def critical_values(self):
        return [bracket.value for bracket in self.brackets]

    def rows(self):
        return [[value, category.value] for value, category in zip(self.values, self.categories)]

    def as_dict(self):
        return {
            "model": self.model,
            "parameter": self.parameter,
            "critical_values": self.critical_values,
            "brackets": [bracket.as_dict() for bracket in self.brackets],
            "horizon_undecided": list(self.undecided),
        }


def critical_scan(
    model,
    parameter,
    lo,
    hi,
    steps,
    fixed=None,
    samples=2000,
    depth=DECAY_DEPTH,
    tol=CRITICAL_TOL,
    tol_c=CONCURRENCE_TOL,
    point_width=POINT_WIDTH,
):
    """Categorize ``steps`` values of ``parameter`` in [lo, hi] and bisect every change

    ``fixed`` holds the other parameters of the model. Each bracket shrinks until it
    is narrower than ``tol`` while its ends keep their categories.
    """
    model = get_model(model)
    if parameter not in model.parameter_names():
        raise DomainError(f"Model {model.name} has no parameter {parameter!r}")
    if steps < MIN_STEPS:
        raise DomainError(f"A critical scan needs at least {MIN_STEPS} steps, got {steps}")
    if not lo < hi:
        raise DomainError(f"Empty scan range [{lo}, {hi}]")
    base = model.params(fixed)
    undecided = []

    def category_at(value):
        params = model.params({parameter: value}, base=base)
        trajectory = model.build(params, samples, depth=depth)
        zeros = zero_set(trajectory, tol_c=tol_c, point_width=point_width)
        if zeros.horizon_undecided:
            undecided.append(float(value))
        return categorize(zeros)

    values = np.linspace(lo, hi, steps)
    categories = [category_at(value) for value in values]
    brackets = []
    for k in range(steps - 1):
        if categories[k] is categories[k + 1]:
            continue
        low, high = float(values[k]), float(values[k + 1])
        low_category, high_category = categories[k], categories[k + 1]
        while high - low > tol:
            middle = (low + high) / 2
            category = category_at(middle)
            if category is low_category:
                low = middle
            else:
                high, high_category = middle, category
        logger.info(
            "%s %s: %s -> %s at %.9g",
            model.name,
            parameter,
            low_category.value,
            high_category.value,
            (low + high) / 2,
        )
        brackets.append(CriticalBracket(low, high, low_category, high_category))
    return CriticalScan(
        model=model.name,
        parameter=parameter,
        values=tuple(float(value) for value in values),
        categories=tuple(categories),
        brackets=tuple(brackets),
        undecided=tuple(sorted(undecided)),
    )
