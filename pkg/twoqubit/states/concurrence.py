"""Wootters concurrence

With rho = W W^dagger (W = V sqrt(w) from the eigendecomposition), the square roots
of the eigenvalues of rho rho~ are the singular values of the symmetric matrix
tau = W^T (Y (x) Y) W. Negative round-off in w is clipped to zero; genuine small
eigenvalues are kept, their square roots are not negligible.
"""

# Standard Library
import enum
from dataclasses import dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.algebra.generators import SPIN_FLIP
from twoqubit.core.constants import CONCURRENCE_TOL, EIGEN_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import ValidationError

# Local
from .polarization import to_density
from .positivity import positivity


class Separability(enum.Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


@dataclass(frozen=True)
class ConcurrenceResult:
    C: float
    q: float
    lambdas: tuple

    @property
    def lambdas_squared(self):
        """Eigenvalues of rho rho~, largest first"""
        return tuple(value ** 2 for value in self.lambdas)


def wootters_lambdas(rho):
    """Square roots of the eigenvalues of rho rho~ in descending order

    rho may be a stack of density matrices; they are assumed physical.
    """
    eigenvalues, eigenvectors = np.linalg.eigh(rho)
    eigenvalues = np.clip(eigenvalues, 0.0, None)
    factors = eigenvectors * np.sqrt(eigenvalues)[..., np.newaxis, :]
    tau = np.swapaxes(factors, -1, -2) @ SPIN_FLIP @ factors
    return np.linalg.svd(tau, compute_uv=False)


def concurrence_values(n):
    """Vectorized concurrence of physical polarization vectors, no validation"""
    lambdas = wootters_lambdas(to_density(n))
    q = lambdas[..., 0] - lambdas[..., 1] - lambdas[..., 2] - lambdas[..., 3]
    return np.maximum(q, 0.0)


def concurrence(n, tol=POSITIVITY_TOL):
    report = positivity(n, tol=tol)
    if not report.physical:
        raise ValidationError("Concurrence is only defined for physical states", report=report)
    rho = to_density(n)
    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -EIGEN_TOL:
        raise ValidationError(
            f"Density matrix has eigenvalue {smallest:.3g} below -{EIGEN_TOL:g}", report=report
        )
    lambdas = wootters_lambdas(rho)
    q = float(lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])
    return ConcurrenceResult(C=max(0.0, q), q=q, lambdas=tuple(float(value) for value in lambdas))


def separability_class(n, tol_c=CONCURRENCE_TOL, tol=POSITIVITY_TOL):
    if concurrence(n, tol=tol).C <= tol_c:
        return Separability.SEPARABLE
    return Separability.ENTANGLED
