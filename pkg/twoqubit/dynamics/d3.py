"""Bell pair dephased by random telegraph noise

The dynamics stays in span{|00>, |11>}, an effective qubit with Bloch vector
(x, y, z). Its coherence precesses and dephases, x + iy -> zeta_T e^{-i B0 t}(x0 + iy0),
while z is conserved, and C = sqrt(x^2 + y^2). In polarization coordinates
x = n_XX = -n_YY, y = n_XY = n_YX, z = n_IZ = n_ZI and n_ZZ = 1.
"""

# Standard Library
from functools import partial

# Third Party
import numpy as np

# TwoQubit
from twoqubit.channels.maps import AffineMap, MapFamily
from twoqubit.core.constants import DECAY_DEPTH
from twoqubit.states.polarization import DIMENSION
from twoqubit.states.trajectory import Trajectory

# Local
from .base import check_physical, component, vector
from .grids import time_grid
from .params import params_dict
from .rtn import d3_zeta, zeta_decay_rate, zeta_frequency

# orthonormal directions of x and y inside the 15-dimensional space
X_DIRECTION = vector(XX=1, YY=-1) / np.sqrt(2)
Y_DIRECTION = vector(XY=1, YX=1) / np.sqrt(2)


def effective_state(x, y, z):
    """Polarization vector of the effective Bloch vector (x, y, z)"""
    n = np.sqrt(2) * (np.multiply.outer(x, X_DIRECTION) + np.multiply.outer(y, Y_DIRECTION))
    n[..., component("IZ")] = z
    n[..., component("ZI")] = z
    n[..., component("ZZ")] = 1.0
    return n


def d3_map(params, t):
    """Transfer matrix rotating and shrinking the (x, y) plane, identity elsewhere"""
    zeta = float(d3_zeta(t, params.g, params.gamma))
    angle = params.B0 * t
    rotation = zeta * np.array([[np.cos(angle), np.sin(angle)], [-np.sin(angle), np.cos(angle)]])
    basis = np.column_stack([X_DIRECTION, Y_DIRECTION])
    transfer = np.eye(DIMENSION) + basis @ (rotation - np.eye(2)) @ basis.T
    return AffineMap(T=transfer, m=np.zeros(DIMENSION), t=t)


def d3_family(params):
    return MapFamily(name="d3", at=lambda t: d3_map(params, t), unital=True)


def d3_times(params, samples, depth=DECAY_DEPTH):
    return time_grid(
        [zeta_decay_rate(params.g, params.gamma)],
        samples,
        depth=depth,
        frequency=zeta_frequency(params.g, params.gamma),
    )


def d3_trajectory(params, times):
    times = np.asarray(times, dtype=float)
    zeta = d3_zeta(times, params.g, params.gamma)
    coherence = zeta * np.exp(-1j * params.B0 * times) * complex(params.x0, params.y0)
    states = effective_state(coherence.real, coherence.imag, np.full_like(times, params.z0))
    check_physical(states, "d3")
    signed_amplitude = None
    if params.x0 or params.y0:
        signed_amplitude = partial(d3_zeta, g=params.g, gamma=params.gamma)
    return Trajectory(
        times=times,
        concurrence=np.abs(coherence),
        states=states,
        n_infinity=effective_state(0.0, 0.0, params.z0),
        model="d3",
        params=params_dict(params),
        signed_amplitude=signed_amplitude,
    )
