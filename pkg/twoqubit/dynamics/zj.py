"""Generalized Werner states under dephasing and relaxation

Both Werner families stay in a three dimensional subspace with coordinates
X + iY (the Bell coherence) and Z = n_ZZ:

    Phi:  n_XX = -n_YY = X, n_XY = n_YX = Y,  Z = r exp(-Gamma1 t)
    Psi:  n_XX = n_YY = X,  n_XY = -n_YX = Y, Z = -r exp(-Gamma1 t)

The coherence dephases, X + iY = zeta(t) (X0 + iY0), and for the Phi family also
precesses at 2 B0. In the Psi orientation C = max(0, R - (1 + Z)/2) with
R = sqrt(X^2 + Y^2); the Phi family uses the same formula with Z -> -Z.
"""

# Standard Library
from functools import partial

# Third Party
import numpy as np

# TwoQubit
from twoqubit.channels.maps import AffineMap, MapFamily, extended_product_map
from twoqubit.core.constants import DECAY_DEPTH, POSITIVITY_TOL
from twoqubit.states.polarization import DIMENSION
from twoqubit.states.trajectory import Trajectory

# Local
from .base import check_physical, component, vector
from .grids import time_grid
from .params import Dephasing, WernerFamily, params_dict
from .rtn import d3_zeta, exponential_zeta, zeta_decay_rate, zeta_frequency


def dz_concurrence(n_xx, n_xy, n_zz):
    radius = np.hypot(n_xx, n_xy)
    return np.maximum(0.0, radius - (1 + np.asarray(n_zz, dtype=float)) / 2)


def dz_positivity(n_xx, n_xy, n_zz, tol=POSITIVITY_TOL):
    radius = np.hypot(n_xx, n_xy)
    n_zz = np.asarray(n_zz, dtype=float)
    return (
        (2 * radius ** 2 + n_zz ** 2 <= 3 + tol)
        & (n_zz <= 1 - 2 * radius ** 2 + tol)
        & (n_zz >= -1 - tol)
        & (2 * radius + n_zz <= 1 + tol)
    )


def dz_vector(n_xx, n_xy, n_zz):
    """Psi-oriented vector: n_XX = n_YY, n_XY = -n_YX; arguments may be arrays"""
    n_xx, n_xy, n_zz = np.broadcast_arrays(
        *(np.asarray(value, dtype=float) for value in (n_xx, n_xy, n_zz))
    )
    n = np.zeros(n_xx.shape + (DIMENSION,))
    n[..., component("XX")] = n_xx
    n[..., component("YY")] = n_xx
    n[..., component("XY")] = n_xy
    n[..., component("YX")] = -n_xy
    n[..., component("ZZ")] = n_zz
    return n


def dz_eigenvalues(n_xx, n_xy, n_zz):
    """Eigenvalues of rho for Psi-oriented coordinates, populations first"""
    radius = np.hypot(n_xx, n_xy)
    n_zz = np.asarray(n_zz, dtype=float)
    return np.stack(
        np.broadcast_arrays(
            (1 + n_zz) / 4, (1 + n_zz) / 4, (1 - n_zz + 2 * radius) / 4, (1 - n_zz - 2 * radius) / 4
        ),
        axis=-1,
    )


def dz_lambdas(n_xx, n_xy, n_zz):
    """Square roots of the eigenvalues of rho rho~, largest first"""
    radius = np.hypot(n_xx, n_xy)
    n_zz = np.asarray(n_zz, dtype=float)
    lambdas = np.stack(
        np.broadcast_arrays(
            np.abs(1 + n_zz) / 4,
            np.abs(1 + n_zz) / 4,
            np.abs(1 - n_zz + 2 * radius) / 4,
            np.abs(1 - n_zz - 2 * radius) / 4,
        ),
        axis=-1,
    )
    return -np.sort(-lambdas, axis=-1)


def zj_dephasing(params, t):
    """Selected dephasing function, times the relaxation factor when enabled"""
    if params.dephasing is Dephasing.RTN:
        zeta = d3_zeta(t, params.g, params.gamma)
    else:
        zeta = exponential_zeta(t, params.Gamma2)
    if params.relaxation_dephasing:
        zeta = zeta * np.exp(-params.Gamma1 * np.asarray(t, dtype=float) / 2)
    return zeta


def dephasing_rate(params):
    if params.dephasing is Dephasing.RTN:
        rate = zeta_decay_rate(params.g, params.gamma)
    else:
        rate = params.Gamma2
    if params.relaxation_dephasing:
        rate += params.Gamma1 / 2
    return rate


def oriented(params, z):
    """Z in the orientation where the Psi-family formulas hold"""
    return z if params.family is WernerFamily.PSI else -z


def initial_coherence(params):
    if params.family is WernerFamily.PHI:
        return params.r * np.exp(1j * params.phi)
    return params.r * np.exp(-1j * params.phi)


def zj_coordinates(params, times):
    """X, Y and Z along the trajectory"""
    times = np.asarray(times, dtype=float)
    coherence = zj_dephasing(params, times) * initial_coherence(params)
    if params.family is WernerFamily.PHI:
        coherence = coherence * np.exp(-2j * params.B0 * times)
        sign = 1
    else:
        sign = -1
    z = sign * params.r * np.exp(-params.Gamma1 * times)
    return coherence.real, coherence.imag, z


def zj_states(params, x, y, z):
    n = np.zeros(np.shape(x) + (DIMENSION,))
    n[..., component("XX")] = x
    n[..., component("XY")] = y
    n[..., component("ZZ")] = z
    if params.family is WernerFamily.PHI:
        n[..., component("YY")] = -x
        n[..., component("YX")] = y
    else:
        n[..., component("YY")] = x
        n[..., component("YX")] = -y
    return n


# directions of the two Bell coherence planes: (X, Y) of the Phi and of the Psi family
PHI_PLANE = np.column_stack([vector(XX=1, YY=-1), vector(XY=1, YX=1)]) / np.sqrt(2)
PSI_PLANE = np.column_stack([vector(XX=1, YY=1), vector(XY=1, YX=-1)]) / np.sqrt(2)


def relaxation_transfer(params, t):
    """Single-qubit relaxation to the maximally mixed state in the (I, X, Y, Z) basis"""
    population = np.exp(-params.Gamma1 * t / 2)
    coherence = np.sqrt(population) if params.relaxation_dephasing else 1.0
    return np.diag([1.0, coherence, coherence, population])


def zj_map(params, t):
    """Product relaxation followed by collective dephasing of both Bell planes

    Components outside the two planes only feel the relaxation.
    """
    transfer = relaxation_transfer(params, t)
    relaxation = extended_product_map(transfer, transfer, t=t)
    if params.dephasing is Dephasing.RTN:
        zeta = float(d3_zeta(t, params.g, params.gamma))
    else:
        zeta = float(exponential_zeta(t, params.Gamma2))
    angle = 2 * params.B0 * t
    rotation = zeta * np.array([[np.cos(angle), np.sin(angle)], [-np.sin(angle), np.cos(angle)]])
    dephasing = (
        np.eye(DIMENSION)
        + PHI_PLANE @ (rotation - np.eye(2)) @ PHI_PLANE.T
        + PSI_PLANE @ ((zeta - 1) * np.eye(2)) @ PSI_PLANE.T
    )
    return AffineMap(T=dephasing @ relaxation.T, m=dephasing @ relaxation.m, t=t)


def zj_family(params):
    return MapFamily(name="zj", at=lambda t: zj_map(params, t), unital=True)


def zj_n_infinity(params):
    if params.Gamma1 > 0:
        return np.zeros(DIMENSION)
    sign = 1 if params.family is WernerFamily.PHI else -1
    return vector(ZZ=sign * params.r)


def zj_times(params, samples, depth=DECAY_DEPTH):
    frequency = 0.0
    if params.dephasing is Dephasing.RTN:
        frequency = zeta_frequency(params.g, params.gamma)
    return time_grid(
        [dephasing_rate(params), params.Gamma1], samples, depth=depth, frequency=frequency
    )


def zj_trajectory(params, times):
    times = np.asarray(times, dtype=float)
    x, y, z = zj_coordinates(params, times)
    states = zj_states(params, x, y, z)
    check_physical(states, "zj")
    oriented_z = oriented(params, z)
    signed_amplitude = None
    if params.r == 1 and params.Gamma1 == 0:
        signed_amplitude = partial(zj_dephasing, params)
    return Trajectory(
        times=times,
        concurrence=dz_concurrence(x, y, oriented_z),
        states=states,
        n_infinity=zj_n_infinity(params),
        model="zj",
        params=params_dict(params),
        signed_amplitude=signed_amplitude,
    )
