"""Two-dimensional sections of the state space

Setting every component except n_i = x and n_j = y to zero leaves one of two shapes.
Anticommuting generators give the disc x^2 + y^2 <= 1 (the a3 condition), commuting
generators give the square |x| + |y| <= 1 with corners on the axes (the a4
condition, which factors into the four edges).
"""

# Standard Library
import enum
from dataclasses import dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.algebra.generators import CommutationClass, GeneratorIndex, as_index, commutation_class
from twoqubit.core.exceptions import DomainError
from twoqubit.states.polarization import DIMENSION

MIN_BOUNDARY_SAMPLES = 8


class SectionKind(enum.Enum):
    DISC = "disc"
    SQUARE = "square"


@dataclass(frozen=True)
class SectionShape:
    kind: SectionKind
    i: GeneratorIndex
    j: GeneratorIndex

    @property
    def letter(self):
        """Table letter, S for the square and D for the disc"""
        return "S" if self.kind is SectionKind.SQUARE else "D"


def section_type(i, j):
    i, j = as_index(i), as_index(j)
    if i == j:
        raise DomainError(f"A section needs two distinct generators, got {i.name} twice")
    if commutation_class(i, j) is CommutationClass.COMMUTE:
        return SectionShape(SectionKind.SQUARE, i, j)
    return SectionShape(SectionKind.DISC, i, j)


def table1():
    """Lower-triangular shape table: row i holds the letters for columns 1..i-1"""
    return tuple(
        tuple(section_type(row, column).letter for column in range(1, row))
        for row in range(1, DIMENSION + 1)
    )


def section_vector(i, j, x, y):
    """n with n_i = x and n_j = y; x and y may be arrays of matching shape"""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    n = np.zeros(x.shape + (DIMENSION,))
    n[..., as_index(i) - 1] = x
    n[..., as_index(j) - 1] = y
    return n


def section_boundary(i, j, samples):
    """Boundary points counterclockwise from the positive x axis, shape (samples, 2)"""
    shape = section_type(i, j)
    if samples < MIN_BOUNDARY_SAMPLES:
        raise DomainError(f"Need at least {MIN_BOUNDARY_SAMPLES} boundary samples, got {samples}")
    angles = 2 * np.pi * np.arange(samples) / samples
    points = np.column_stack([np.cos(angles), np.sin(angles)])
    if shape.kind is SectionKind.SQUARE:
        points /= np.abs(points).sum(axis=1, keepdims=True)
    return points
