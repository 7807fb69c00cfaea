"""Radial probability profiles and the volumes integrated from them

The fraction p(r) of sphere samples that are physical (or separable) at radius r
gives the volume V = 15 V_B int_0^1 p(r~) r~^14 dr~ in units of the radius sqrt(3)
ball, whose volume is V_B = pi^7.5 / Gamma(8.5) * 3^7.5.
"""

# Django
from celery import group

# Standard Library
import logging
from dataclasses import dataclass

# Third Party
import numpy as np
from scipy.integrate import simpson
from scipy.special import gamma

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import ConfigurationError, DomainError
from twoqubit.states.polarization import DIMENSION, PURE_NORM_SQUARED

# Local
from .tasks import estimate_radius

logger = logging.getLogger(__name__)

BALL_VOLUME = np.pi ** 7.5 / gamma(8.5) * PURE_NORM_SQUARED ** 7.5
MAX_RADIUS = np.sqrt(PURE_NORM_SQUARED)
MIN_RADIAL_STEPS = 10
MIN_SAMPLES = 1000
DEFAULT_BLOCK_SIZE = 100_000


@dataclass(frozen=True, eq=False)
class RadialProfile:
    radii: np.ndarray
    p_phys: np.ndarray
    p_sep: np.ndarray
    samples_per_radius: int
    seed: int

    @property
    def steps(self):
        return len(self.radii) - 1

    def standard_error(self, probabilities):
        return np.sqrt(probabilities * (1 - probabilities) / self.samples_per_radius)

    @property
    def p_phys_err(self):
        return self.standard_error(self.p_phys)

    @property
    def p_sep_err(self):
        return self.standard_error(self.p_sep)

    def rows(self):
        return zip(self.radii, self.p_phys, self.p_phys_err, self.p_sep, self.p_sep_err)


@dataclass(frozen=True)
class Estimate:
    value: float
    error: float


@dataclass(frozen=True)
class VolumeEstimate:
    V_phys: Estimate
    V_sep: Estimate
    ratio: Estimate
    V_B: float = BALL_VOLUME

    def as_dict(self):
        return {
            "V_phys": self.V_phys.value,
            "V_sep": self.V_sep.value,
            "ratio": self.ratio.value,
            "V_B": self.V_B,
            "errors": {
                "V_phys": self.V_phys.error,
                "V_sep": self.V_sep.error,
                "ratio": self.ratio.error,
            },
        }


def radial_profile(
    steps,
    samples,
    seed,
    tol=POSITIVITY_TOL,
    tol_c=CONCURRENCE_TOL,
    block_size=DEFAULT_BLOCK_SIZE,
):
    """Estimate p_phys and p_sep on the radii r_k = sqrt(3) k / steps, k = 0..steps

    One celery task per radius; with eager execution they run in process.
    """
    if steps < MIN_RADIAL_STEPS:
        raise DomainError(f"Need at least {MIN_RADIAL_STEPS} radial steps, got {steps}")
    if samples < MIN_SAMPLES:
        raise DomainError(f"Need at least {MIN_SAMPLES} samples per radius, got {samples}")
    if block_size < 1:
        raise DomainError(f"Block size must be positive, got {block_size}")
    radii = MAX_RADIUS * np.arange(steps + 1) / steps
    job = group(
        estimate_radius.s(seed, k, float(radius), samples, block_size, tol, tol_c)
        for k, radius in enumerate(radii)
    )
    results = sorted(job.apply_async().get(), key=lambda result: result["k"])
    physical = np.array([result["physical"] for result in results], dtype=float)
    separable = np.array([result["separable"] for result in results], dtype=float)
    logger.info("Radial profile done: %d radii, %d samples each", steps + 1, samples)
    return RadialProfile(
        radii=radii,
        p_phys=physical / samples,
        p_sep=separable / samples,
        samples_per_radius=samples,
        seed=seed,
    )


def simpson_weights(steps):
    """Composite Simpson weights on the unit interval with steps + 1 points"""
    if steps % 2:
        raise ConfigurationError(f"Simpson's rule needs an even number of radial steps, got {steps}")
    grid = np.linspace(0, 1, steps + 1)
    return simpson(np.eye(steps + 1), x=grid, axis=-1)


def volume_integral(probabilities, errors=None):
    """15 V_B int_0^1 p(r) r^14 dr and its standard error for independent p_k"""
    probabilities = np.asarray(probabilities, dtype=float)
    steps = len(probabilities) - 1
    grid = np.linspace(0, 1, steps + 1)
    scale = DIMENSION * BALL_VOLUME * grid ** (DIMENSION - 1)
    weights = simpson_weights(steps) * scale
    value = float(weights @ probabilities)
    error = 0.0 if errors is None else float(np.sqrt(np.sum((weights * errors) ** 2)))
    return Estimate(value, error)


def volume(profile, which):
    if which == "phys":
        return volume_integral(profile.p_phys, profile.p_phys_err)
    if which == "sep":
        return volume_integral(profile.p_sep, profile.p_sep_err)
    raise DomainError(f"Volume of {which!r} is not defined, use 'phys' or 'sep'")


def volume_estimate(profile):
    physical = volume(profile, "phys")
    separable = volume(profile, "sep")
    if physical.value > 0:
        ratio = separable.value / physical.value
        relative = np.hypot(
            separable.error / separable.value if separable.value else 0.0,
            physical.error / physical.value,
        )
        ratio_estimate = Estimate(ratio, float(ratio * relative))
    else:
        ratio_estimate = Estimate(float("nan"), float("nan"))
    logger.info(
        "V_phys = %.6g, V_sep = %.6g, ratio = %.4g",
        physical.value,
        separable.value,
        ratio_estimate.value,
    )
    return VolumeEstimate(V_phys=physical, V_sep=separable, ratio=ratio_estimate)
