"""Conversion between polarization vectors and density matrices

rho = I/4 + (1/4) sum_i n_i mu_i and n_i = Tr(rho mu_i). Both functions accept a
single state or a stack of states along the leading axes.
"""

# Third Party
import numpy as np

# TwoQubit
from twoqubit.algebra.generators import GENERATORS, IDENTITY
from twoqubit.core.constants import DENSITY_TOL
from twoqubit.core.exceptions import ValidationError

DIMENSION = 15
# |n|^2 of a pure state
PURE_NORM_SQUARED = 3.0
# radius of the ball of separable states about the origin
SEPARABLE_RADIUS = 1 / np.sqrt(3)


def as_vector(n):
    vector = np.asarray(n, dtype=float)
    if vector.shape[-1:] != (DIMENSION,):
        raise ValidationError(
            f"A polarization vector has {DIMENSION} components, got shape {vector.shape}"
        )
    return vector


def to_density(n):
    n = as_vector(n)
    return (IDENTITY + np.einsum("...i,iab->...ab", n, GENERATORS)) / 4


def validate_density(rho, tol=DENSITY_TOL):
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (4, 4):
        raise ValidationError(f"A density matrix is 4x4, got shape {rho.shape}")
    hermitian_error = np.max(np.abs(rho - np.conj(np.swapaxes(rho, -1, -2))))
    if hermitian_error > tol:
        raise ValidationError(f"Density matrix is not Hermitian (error {hermitian_error:.3g})")
    trace_error = np.max(np.abs(np.trace(rho, axis1=-2, axis2=-1) - 1))
    if trace_error > tol:
        raise ValidationError(f"Density matrix trace differs from 1 by {trace_error:.3g}")
    return rho


def to_polarization(rho, tol=DENSITY_TOL):
    rho = validate_density(rho, tol=tol)
    return np.einsum("...ab,iba->...i", rho, GENERATORS).real


def purity_deficit(n):
    """1 - Tr rho^2, which equals (3 - |n|^2) / 4"""
    n = as_vector(n)
    return (PURE_NORM_SQUARED - np.sum(n ** 2, axis=-1)) / 4
