"""Dephasing functions

Random telegraph noise of amplitude g and switching rate gamma dephases a qubit by

    zeta_T(t) = exp(-gamma t) [cos(Omega t) + (gamma / Omega) sin(Omega t)],

Omega = sqrt(g^2 - gamma^2). For g < gamma the functions turn hyperbolic (motional
narrowing, monotonic decay); for g > gamma zeta_T oscillates through zero.
"""

# Third Party
import numpy as np

# limit exp(-gamma t)(1 + gamma t) is used when |g - gamma| < CRITICAL_RTOL max(g, gamma)
CRITICAL_RTOL = 1e-8


def is_critical(g, gamma):
    return abs(g - gamma) < CRITICAL_RTOL * max(g, gamma)


def d3_zeta(t, g, gamma):
    t = np.asarray(t, dtype=float)
    if g == 0 and gamma == 0:
        return np.ones_like(t)
    if is_critical(g, gamma):
        return np.exp(-gamma * t) * (1 + gamma * t)
    if g > gamma:
        omega = np.sqrt(g ** 2 - gamma ** 2)
        return np.exp(-gamma * t) * (np.cos(omega * t) + gamma / omega * np.sin(omega * t))
    # exp(-gamma t) [cosh(k t) + (gamma / k) sinh(k t)] without overflow
    k = np.sqrt(gamma ** 2 - g ** 2)
    return 0.5 * (1 + gamma / k) * np.exp(-(gamma - k) * t) + 0.5 * (1 - gamma / k) * np.exp(
        -(gamma + k) * t
    )


def zeta_decay_rate(g, gamma):
    """Rate of the slowest exponential in the envelope of zeta_T"""
    if g >= gamma or is_critical(g, gamma):
        return gamma
    return gamma - np.sqrt(gamma ** 2 - g ** 2)


def zeta_frequency(g, gamma):
    """Angular frequency of the oscillations of zeta_T, zero when it does not oscillate"""
    if g > gamma and not is_critical(g, gamma):
        return np.sqrt(g ** 2 - gamma ** 2)
    return 0.0


def exponential_zeta(t, rate):
    return np.exp(-rate * np.asarray(t, dtype=float))
