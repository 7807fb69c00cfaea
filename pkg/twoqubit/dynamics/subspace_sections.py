"""Grids over the ye and zj dynamical subspaces and their two-dimensional cuts

Both subspaces hold X states, so rho has closed-form eigenvalues in the subspace
coordinates and a2, a3, a4 are their elementary symmetric polynomials.

    ye  (n_IZ, n_XX, n_ZZ)  the tetrahedron spanned by |00>, |11> and the Psi Bell states
    zj  (n_XX, n_XY, n_ZZ)  the cone 2 R <= 1 - n_ZZ, n_ZZ >= -1, Psi orientation

In every cut the second axis is n_ZZ. The a2 = 0 set is the ellipse
2 x^2 + n_ZZ^2 = 3; the a3 and a4 zero sets are a parabola and two lines through
the corners of the physical triangle.
"""

# Standard Library
import itertools
from dataclasses import dataclass
from typing import Callable, Optional

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import DomainError

# Local
from .ye import ye_eigenvalues, ye_lambdas, ye_vector
from .zj import dz_eigenvalues, dz_lambdas, dz_vector

CUT_EXTENT = np.sqrt(3)
MIN_GRID_SAMPLES = 3

YE_VERTICES = np.array([[0.0, -1.0, -1.0], [0.0, 1.0, -1.0], [-1.0, 0.0, 1.0], [1.0, 0.0, 1.0]])
YE_EDGES = tuple(itertools.combinations(range(len(YE_VERTICES)), 2))
YE_VOLUME = 4 / 3
ZJ_APEX = np.array([0.0, 0.0, 1.0])
ZJ_VOLUME = 2 * np.pi / 3


@dataclass(frozen=True)
class Subspace:
    name: str
    axes: tuple
    vector: Callable
    eigenvalues: Callable
    lambdas: Callable
    volume: float


YE = Subspace("ye", ("IZ", "XX", "ZZ"), ye_vector, ye_eigenvalues, ye_lambdas, YE_VOLUME)
ZJ = Subspace("zj", ("XX", "XY", "ZZ"), dz_vector, dz_eigenvalues, dz_lambdas, ZJ_VOLUME)


@dataclass(frozen=True)
class Cut:
    """The whole subspace, or its plane with one axis held at zero

    ``orientation`` is -1 when the physical triangle has its apex at n_ZZ = -1.
    """

    subspace: Subspace
    zero: Optional[str] = None
    orientation: int = 1

    @property
    def name(self):
        if self.zero is None:
            return self.subspace.name
        return f"{self.subspace.name}-{self.zero.lower()}0"

    @property
    def free_axes(self):
        return tuple(axis for axis in self.subspace.axes if axis != self.zero)

    @property
    def dimension(self):
        return len(self.free_axes)


CUTS = {
    cut.name: cut
    for cut in (
        Cut(YE),
        Cut(YE, "IZ"),
        Cut(YE, "XX", orientation=-1),
        Cut(ZJ),
        Cut(ZJ, "XY"),
    )
}


def get_cut(name):
    try:
        return CUTS[name]
    except KeyError:
        raise DomainError(f"Unknown subspace cut {name!r}, expected one of {sorted(CUTS)}") from None


def symmetric_coefficients(eigenvalues):
    """a2, a3 and a4 stacked along the last axis"""
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    coefficients = np.zeros(eigenvalues.shape[:-1] + (eigenvalues.shape[-1] + 1,))
    coefficients[..., 0] = 1
    for k in range(eigenvalues.shape[-1]):
        coefficients[..., 1:] = (
            coefficients[..., 1:] + eigenvalues[..., k, np.newaxis] * coefficients[..., :-1]
        )
    return coefficients[..., 2:]


@dataclass(frozen=True, eq=False)
class SubspaceGrid:
    cut: Cut
    points: np.ndarray
    coefficients: np.ndarray
    physical: np.ndarray
    concurrence: np.ndarray
    cell_volume: float

    def __len__(self):
        return len(self.points)

    def entangled(self, tol_c=CONCURRENCE_TOL):
        return self.physical & (np.nan_to_num(self.concurrence) > tol_c)

    @property
    def physical_volume(self):
        """Grid estimate of the volume (or area) of the physical region"""
        return float(np.count_nonzero(self.physical) * self.cell_volume)

    def separable_volume(self, tol_c=CONCURRENCE_TOL):
        separable = self.physical & ~self.entangled(tol_c)
        return float(np.count_nonzero(separable) * self.cell_volume)

    def rows(self):
        for point, coefficients, physical, concurrence in zip(
            self.points, self.coefficients, self.physical, self.concurrence
        ):
            yield [*point, *coefficients, bool(physical), None if np.isnan(concurrence) else concurrence]

    @property
    def header(self):
        return [f"n_{axis}" for axis in self.cut.free_axes] + ["a2", "a3", "a4", "physical", "concurrence"]


def cut_coordinates(cut, points):
    """Full subspace coordinates for points given in the free axes of the cut"""
    columns = iter(np.moveaxis(points, -1, 0))
    return [
        np.zeros(points.shape[:-1]) if axis == cut.zero else next(columns)
        for axis in cut.subspace.axes
    ]


def subspace_grid(cut, samples, extent=None, tol=POSITIVITY_TOL):
    """Regular grid over the cut with a2, a3, a4, the physical flag and C

    The grid spans [-extent, extent] on every free axis; by default the unit cube
    for a whole subspace and a square holding the a2 ellipse for a plane cut.
    Concurrence is NaN outside the physical region.
    """
    if samples < MIN_GRID_SAMPLES:
        raise DomainError(f"Need at least {MIN_GRID_SAMPLES} grid samples per axis, got {samples}")
    if extent is None:
        extent = 1.0 if cut.zero is None else CUT_EXTENT
    axis = np.linspace(-extent, extent, samples)
    mesh = np.meshgrid(*([axis] * cut.dimension), indexing="ij")
    points = np.stack([values.ravel() for values in mesh], axis=-1)
    coordinates = cut_coordinates(cut, points)
    coefficients = symmetric_coefficients(cut.subspace.eigenvalues(*coordinates))
    physical = np.min(coefficients, axis=-1) >= -tol
    lambdas = cut.subspace.lambdas(*coordinates)
    q = lambdas[..., 0] - lambdas[..., 1] - lambdas[..., 2] - lambdas[..., 3]
    concurrence = np.where(physical, np.maximum(q, 0.0), np.nan)
    spacing = axis[1] - axis[0]
    return SubspaceGrid(
        cut=cut,
        points=points,
        coefficients=coefficients,
        physical=physical,
        concurrence=concurrence,
        cell_volume=float(spacing ** cut.dimension),
    )


def boundary_curves(cut, samples):
    """Zero sets of a2, a3 and a4 in a plane cut, each a list of (samples, 2) arrays"""
    if cut.zero is None:
        raise DomainError(f"{cut.name} is a whole subspace, boundary curves need a plane cut")
    if samples < MIN_GRID_SAMPLES:
        raise DomainError(f"Need at least {MIN_GRID_SAMPLES} curve samples, got {samples}")
    side = cut.orientation
    angles = np.linspace(0, 2 * np.pi, samples)
    x = np.linspace(-1, 1, samples)
    # the base of the triangle lies on n_ZZ = -side
    base = np.column_stack([x, np.full_like(x, -side)])
    return {
        "a2": [np.column_stack([np.sqrt(1.5) * np.cos(angles), np.sqrt(3) * np.sin(angles)])],
        "a3": [np.column_stack([x, side * (1 - 2 * x ** 2)]), base],
        "a4": [np.column_stack([x, side * (1 - 2 * np.abs(x))]), base],
    }


def subspace_outline(cut):
    """Exact description of the whole subspace: ye vertices and edges, the zj cone"""
    if cut.subspace is YE:
        return {"vertices": YE_VERTICES, "edges": YE_EDGES, "volume": YE_VOLUME}
    return {"apex": ZJ_APEX, "base_n_ZZ": -1.0, "base_radius": 1.0, "volume": ZJ_VOLUME}
