"""Quantum channels in polarization coordinates

A channel acts on polarization vectors as n -> T n + m. Kraus maps are converted
with T_ij = Tr(mu_i L(mu_j)) / 4 and m_i = Tr(mu_i L(I)) / 4.
"""

# Standard Library
from dataclasses import asdict, dataclass
from typing import Callable

# Third Party
import numpy as np

# TwoQubit
from twoqubit.algebra.generators import GENERATORS, IDENTITY
from twoqubit.core.constants import COMPLETENESS_TOL, SEMIGROUP_TOL
from twoqubit.core.exceptions import ConsistencyError, DomainError, ValidationError
from twoqubit.states.polarization import DIMENSION


@dataclass(frozen=True, eq=False)
class AffineMap:
    T: np.ndarray
    m: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        transfer = np.asarray(self.T, dtype=float)
        translation = np.asarray(self.m, dtype=float)
        if transfer.shape != (DIMENSION, DIMENSION) or translation.shape != (DIMENSION,):
            raise ValidationError(
                f"An affine map needs a {DIMENSION}x{DIMENSION} T and a {DIMENSION}-vector m"
            )
        object.__setattr__(self, "T", transfer)
        object.__setattr__(self, "m", translation)
        object.__setattr__(self, "t", float(self.t))

    def apply(self, n):
        return affine_apply(self, n)

    def singular_values(self):
        return np.linalg.svd(self.T, compute_uv=False)

    def as_dict(self):
        return {"t": self.t, "T": self.T, "m": self.m}

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(T=data["T"], m=data["m"], t=data.get("t", 0.0))
        except KeyError as exc:
            raise ValidationError(f"Affine map is missing {exc}") from exc


def identity_map(t=0.0):
    return AffineMap(T=np.eye(DIMENSION), m=np.zeros(DIMENSION), t=t)


def affine_apply(affine, n):
    """T n + m for a single vector or a stack of row vectors"""
    return np.asarray(n, dtype=float) @ affine.T.T + affine.m


def affine_compose(later, earlier):
    """The map applying ``earlier`` first and ``later`` second"""
    return AffineMap(
        T=later.T @ earlier.T,
        m=later.T @ earlier.m + later.m,
        t=later.t + earlier.t,
    )


def extended_product_map(transfer_a, transfer_b, t=0.0):
    """Two-qubit map from single-qubit 4x4 transfer matrices in the (I, X, Y, Z) basis

    The correlation tensor N_ab = Tr(rho sigma_a (x) sigma_b) transforms with
    R_A (x) R_B, and n_i is N flattened with N_00 = 1 dropped.
    """
    extended = np.kron(np.asarray(transfer_a, dtype=float), np.asarray(transfer_b, dtype=float))
    return AffineMap(T=extended[1:, 1:], m=extended[1:, 0], t=t)


@dataclass(frozen=True, eq=False)
class KrausMap:
    operators: tuple

    def __post_init__(self):
        operators = tuple(np.asarray(operator, dtype=complex) for operator in self.operators)
        if not operators or any(operator.shape != (4, 4) for operator in operators):
            raise ValidationError("Kraus operators must be a non-empty list of 4x4 matrices")
        object.__setattr__(self, "operators", operators)

    def completeness_residual(self):
        """max |sum_a E_a^dagger E_a - I|"""
        total = sum(operator.conj().T @ operator for operator in self.operators)
        return float(np.max(np.abs(total - IDENTITY)))

    def check_completeness(self, tol=COMPLETENESS_TOL):
        residual = self.completeness_residual()
        if residual > tol:
            raise ValidationError(
                f"Kraus operators are not trace preserving (residual {residual:.3g})",
                report=residual,
            )


def kraus_apply(kraus, rho, tol=COMPLETENESS_TOL):
    kraus.check_completeness(tol)
    rho = np.asarray(rho, dtype=complex)
    return sum(operator @ rho @ operator.conj().T for operator in kraus.operators)


def kraus_to_affine(kraus, t=0.0, tol=COMPLETENESS_TOL):
    kraus.check_completeness(tol)
    operators = np.array(kraus.operators)
    inputs = np.concatenate([IDENTITY[np.newaxis], GENERATORS])
    images = np.einsum("aij,njk,alk->nil", operators, inputs, operators.conj())
    # coefficients[i, n] = Tr(mu_i L(input_n)) / 4
    coefficients = np.einsum("iab,nba->in", GENERATORS, images).real / 4
    return AffineMap(T=coefficients[:, 1:], m=coefficients[:, 0], t=t)


@dataclass(frozen=True)
class MapFamily:
    """A one-parameter family t -> AffineMap with T(0) = I and m(0) = 0"""

    name: str
    at: Callable[[float], AffineMap]
    unital: bool = False
    claims_semigroup: bool = False

    def __call__(self, t):
        return self.at(t)

    def is_unital(self, times, tol=1e-12):
        return all(np.max(np.abs(self.at(t).m)) <= tol for t in times)


def semigroup_residual(family, t1, t2):
    """Max-norm gaps of T(t1 + t2) = T(t2) T(t1) and m(t1 + t2) = T(t2) m(t1) + m(t2)"""
    if t1 < 0 or t2 < 0:
        raise DomainError(f"Semigroup times must be non-negative, got {t1}, {t2}")
    first, second, total = family(t1), family(t2), family(t1 + t2)
    residual_T = np.max(np.abs(total.T - second.T @ first.T))
    residual_m = np.max(np.abs(total.m - second.T @ first.m - second.m))
    return float(residual_T), float(residual_m)


def semigroup_grid(low=1e-3, high=10.0, size=16):
    times = np.geomspace(low, high, size)
    return [(float(t1), float(t2)) for t1 in times for t2 in times]


def max_semigroup_residual(family, grid=None):
    residuals = [semigroup_residual(family, t1, t2) for t1, t2 in grid or semigroup_grid()]
    return max(r[0] for r in residuals), max(r[1] for r in residuals)


@dataclass(frozen=True)
class SemigroupReport:
    family: str
    claimed: bool
    residual_T: float
    residual_m: float
    tolerance: float

    @property
    def holds(self):
        return max(self.residual_T, self.residual_m) <= self.tolerance

    def as_dict(self):
        return {**asdict(self), "holds": self.holds}


def check_semigroup(family, grid=None, tol=SEMIGROUP_TOL):
    """Residuals of the composition law on the grid

    A family that claims the semigroup property and misses it by more than tol is
    an internal error; for the others the report only records the residuals.
    """
    residual_T, residual_m = max_semigroup_residual(family, grid)
    report = SemigroupReport(family.name, family.claims_semigroup, residual_T, residual_m, tol)
    if report.claimed and not report.holds:
        raise ConsistencyError(
            f"{family.name} claims the semigroup property but composes with residuals "
            f"{residual_T:.3g}, {residual_m:.3g}"
        )
    return report
