"""Spontaneous emission of two qubits

Each qubit decays to |1> at rate Gamma through the Kraus operators
F1 = [[g, 0], [0, 1]] and F2 = [[0, 0], [w, 0]], g = exp(-Gamma t / 2),
w = sqrt(1 - exp(-Gamma t)). Starting from

    rho(0) = (1/3) [[a0, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1 - a0]]

the state keeps the same X shape with k = exp(-Gamma t):

    a = k^2 a0, b = c = k + k (1 - k) a0, z = k,
    d = 1 - a0 + 2 (1 - k) + (1 - k)^2 a0.
"""

# Standard Library
import enum

# Third Party
import numpy as np

# TwoQubit
from twoqubit.channels.maps import KrausMap, MapFamily, extended_product_map
from twoqubit.core.constants import DECAY_DEPTH
from twoqubit.states.trajectory import Trajectory

# Local
from .base import check_physical, component, vector
from .grids import time_grid
from .params import params_dict

N_INFINITY = vector(IZ=-1, ZI=-1, ZZ=1)
# outward normal of the separable boundary at n_inf in (n_IZ, n_XX, n_ZZ)
BOUNDARY_NORMAL = np.array([2.0, -2.0, 1.0]) / 3
CRITICAL_A0 = 1 / 3
TANGENT_TOL = 1e-12


class TangentPrediction(enum.Enum):
    CATEGORY_A = "A"
    CATEGORY_E = "E"
    CRITICAL = "critical"


def decay(params, t):
    return np.exp(-params.Gamma * np.asarray(t, dtype=float))


def ye_state(params, t):
    k = decay(params, t)
    a0 = params.a0
    local = -1 + 2 / 3 * (1 + a0) * k
    n = np.zeros(np.shape(k) + (15,))
    n[..., component("IZ")] = local
    n[..., component("ZI")] = local
    n[..., component("XX")] = 2 / 3 * k
    n[..., component("YY")] = 2 / 3 * k
    n[..., component("ZZ")] = 1 - 4 / 3 * (1 + a0) * k + 4 / 3 * a0 * k ** 2
    return n


def ye_density(params, t):
    k = float(decay(params, t))
    a0 = params.a0
    diagonal = k + k * (1 - k) * a0
    rho = np.diag([k ** 2 * a0, diagonal, diagonal, 1 - a0 + 2 * (1 - k) + (1 - k) ** 2 * a0])
    rho[1, 2] = rho[2, 1] = k
    return rho.astype(complex) / 3


def ye_concurrence(params, t):
    """C = (2/3) max(0, k f), f = 1 - sqrt(a0 d)"""
    k = decay(params, t)
    a0 = params.a0
    f = 1 - np.sqrt(a0 * (1 - a0 + 2 * (1 - k) + (1 - k) ** 2 * a0))
    return 2 / 3 * np.maximum(0.0, k * f)


def ye_vector(n_iz, n_xx, n_zz):
    """Polarization vector with n_IZ = n_ZI and n_XX = n_YY; arguments may be arrays"""
    n_iz, n_xx, n_zz = np.broadcast_arrays(
        *(np.asarray(value, dtype=float) for value in (n_iz, n_xx, n_zz))
    )
    n = np.zeros(n_iz.shape + (15,))
    n[..., component("IZ")] = n_iz
    n[..., component("ZI")] = n_iz
    n[..., component("XX")] = n_xx
    n[..., component("YY")] = n_xx
    n[..., component("ZZ")] = n_zz
    return n


def ye_coordinates(n):
    """(n_IZ, n_XX, n_ZZ) of vectors in the subspace"""
    n = np.asarray(n, dtype=float)
    return n[..., component("IZ")], n[..., component("XX")], n[..., component("ZZ")]


def ye_eigenvalues(n_iz, n_xx, n_zz):
    """Eigenvalues of rho: the populations of |00> and |11>, then the two Psi Bell weights"""
    n_iz, n_xx, n_zz = (np.asarray(value, dtype=float) for value in (n_iz, n_xx, n_zz))
    return np.stack(
        np.broadcast_arrays(
            (1 + n_zz + 2 * n_iz) / 4,
            (1 + n_zz - 2 * n_iz) / 4,
            (1 - n_zz + 2 * n_xx) / 4,
            (1 - n_zz - 2 * n_xx) / 4,
        ),
        axis=-1,
    )


def ye_lambdas(n_iz, n_xx, n_zz):
    """Square roots of the eigenvalues of rho rho~, largest first

    With A = (1 + n_ZZ)^2 - 4 n_IZ^2 they are sqrt(A) / 4 twice and
    |1 - n_ZZ +- 2 n_XX| / 4.
    """
    n_iz, n_xx, n_zz = (np.asarray(value, dtype=float) for value in (n_iz, n_xx, n_zz))
    populations = np.sqrt(np.clip((1 + n_zz) ** 2 - 4 * n_iz ** 2, 0.0, None)) / 4
    lambdas = np.stack(
        np.broadcast_arrays(
            populations,
            populations,
            np.abs(1 - n_zz + 2 * n_xx) / 4,
            np.abs(1 - n_zz - 2 * n_xx) / 4,
        ),
        axis=-1,
    )
    return -np.sort(-lambdas, axis=-1)


def ye_kraus(params, t):
    g = float(np.sqrt(decay(params, t)))
    w = float(np.sqrt(1 - decay(params, t)))
    single = (np.array([[g, 0], [0, 1]]), np.array([[0, 0], [w, 0]]))
    return KrausMap(tuple(np.kron(first, second) for first in single for second in single))


def single_qubit_transfer(params, t):
    """Amplitude damping towards |1> in the (I, X, Y, Z) basis"""
    k = float(decay(params, t))
    g = np.sqrt(k)
    return np.array([[1, 0, 0, 0], [0, g, 0, 0], [0, 0, g, 0], [k - 1, 0, 0, k]])


def ye_map(params, t):
    transfer = single_qubit_transfer(params, t)
    return extended_product_map(transfer, transfer, t=t)


def ye_family(params):
    return MapFamily(name="ye", at=lambda t: ye_map(params, t), claims_semigroup=True)


def ye_tangent_test(params):
    """Side of the separable boundary from which the trajectory reaches n_inf

    The limiting tangent n_T = (1 + a0, 1, 4 a0 - 2) meets the normal at
    dot = (6 a0 - 2) / 3; a positive dot means the trajectory enters the separable
    set before reaching n_inf.
    """
    tangent = np.array([1 + params.a0, 1.0, 4 * params.a0 - 2])
    dot = float(BOUNDARY_NORMAL @ tangent)
    if abs(dot) <= TANGENT_TOL:
        return dot, TangentPrediction.CRITICAL
    if dot > 0:
        return dot, TangentPrediction.CATEGORY_E
    return dot, TangentPrediction.CATEGORY_A


def ye_times(params, samples, depth=DECAY_DEPTH):
    return time_grid([params.Gamma], samples, depth=depth)


def ye_trajectory(params, times):
    times = np.asarray(times, dtype=float)
    states = ye_state(params, times)
    check_physical(states, "ye")
    return Trajectory(
        times=times,
        concurrence=ye_concurrence(params, times),
        states=states,
        n_infinity=N_INFINITY.copy(),
        model="ye",
        params=params_dict(params),
    )
