"""Positivity of a two-qubit state from the characteristic polynomial

The coefficients a_k of det(x - rho) = x^4 - a1 x^3 + a2 x^2 - a3 x + a4 are the
elementary symmetric polynomials of the eigenvalues, so rho >= 0 exactly when every
a_k >= 0. They follow from the traces of rho^2, rho^3 and rho^4:

    1! a1 = 1
    2! a2 = 1 - Tr rho^2
    3! a3 = 1 - 3 Tr rho^2 + 2 Tr rho^3
    4! a4 = 1 - 6 Tr rho^2 + 8 Tr rho^3 + 3 (Tr rho^2)^2 - 6 Tr rho^4
"""

# Standard Library
from dataclasses import asdict, dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import POSITIVITY_TOL
from twoqubit.core.exceptions import DomainError

# Local
from .polarization import to_density


@dataclass(frozen=True)
class PositivityReport:
    a1: float
    a2: float
    a3: float
    a4: float
    trace2: float
    trace3: float
    trace4: float
    physical: bool
    tolerance: float

    @property
    def coefficients(self):
        return (self.a1, self.a2, self.a3, self.a4)

    def as_dict(self):
        return asdict(self)


def trace_powers(n):
    """Tr rho^2, Tr rho^3 and Tr rho^4 for one state or a stack of states"""
    rho = to_density(n)
    rho2 = rho @ rho
    trace2 = np.einsum("...aa->...", rho2).real
    trace3 = np.einsum("...ab,...ba->...", rho2, rho).real
    trace4 = np.einsum("...ab,...ba->...", rho2, rho2).real
    return trace2, trace3, trace4


def characteristic_coefficients(n):
    """a1..a4 stacked along the last axis"""
    trace2, trace3, trace4 = trace_powers(n)
    a1 = np.ones_like(trace2)
    a2 = (1 - trace2) / 2
    a3 = (1 - 3 * trace2 + 2 * trace3) / 6
    a4 = (1 - 6 * trace2 + 8 * trace3 + 3 * trace2 ** 2 - 6 * trace4) / 24
    return np.stack([a1, a2, a3, a4], axis=-1)


def is_physical(n, tol=POSITIVITY_TOL):
    """Vectorized physical flag, min(a2, a3, a4) >= -tol"""
    return np.min(characteristic_coefficients(n)[..., 1:], axis=-1) >= -tol


def positivity(n, tol=POSITIVITY_TOL):
    if tol < 0:
        raise DomainError(f"Positivity tolerance must be non-negative, got {tol}")
    trace2, trace3, trace4 = (float(value) for value in trace_powers(n))
    a1, a2, a3, a4 = (float(value) for value in characteristic_coefficients(n))
    return PositivityReport(
        a1=a1,
        a2=a2,
        a3=a3,
        a4=a4,
        trace2=trace2,
        trace3=trace3,
        trace4=trace4,
        physical=min(a2, a3, a4) >= -tol,
        tolerance=tol,
    )
