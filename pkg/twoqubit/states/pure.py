# Third Party
import numpy as np

# Local
from .polarization import to_polarization


def pure_ket(theta1, theta2, theta3, phi1, phi2, phi3):
    """Six-angle parametrization of a two-qubit ket, overall phase dropped"""
    return np.array(
        [
            np.cos(theta1),
            np.exp(1j * phi1) * np.sin(theta1) * np.sin(theta2),
            np.exp(1j * phi2) * np.sin(theta1) * np.cos(theta2) * np.cos(theta3),
            np.exp(1j * phi3) * np.sin(theta1) * np.cos(theta2) * np.sin(theta3),
        ]
    )


def pure_state(theta1, theta2, theta3, phi1, phi2, phi3):
    ket = pure_ket(theta1, theta2, theta3, phi1, phi2, phi3)
    return to_polarization(np.outer(ket, ket.conj()))


def haar_pure_states(size, rng):
    """Polarization vectors of Haar-random pure states"""
    kets = rng.standard_normal((size, 4)) + 1j * rng.standard_normal((size, 4))
    kets /= np.linalg.norm(kets, axis=1, keepdims=True)
    return to_polarization(np.einsum("ka,kb->kab", kets, kets.conj()))
