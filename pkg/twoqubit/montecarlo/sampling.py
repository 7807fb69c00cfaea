"""Uniform sampling on spheres and per-radius counting of physical states

Every (seed, radius index, block) triple owns an independent generator derived
through numpy's SeedSequence, so counts do not depend on evaluation order.
"""

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import DomainError
from twoqubit.states.concurrence import concurrence_values
from twoqubit.states.polarization import DIMENSION
from twoqubit.states.positivity import is_physical


def substream(seed, *keys):
    if seed < 0:
        raise DomainError(f"Seeds must be non-negative, got {seed}")
    return np.random.default_rng(np.random.SeedSequence([int(seed), *(int(key) for key in keys)]))


def sample_sphere(dim, radius, rng, size=None):
    """Point(s) uniformly distributed on the sphere of the given radius in R^dim"""
    if dim < 1:
        raise DomainError(f"Dimension must be at least 1, got {dim}")
    if radius <= 0:
        raise DomainError(f"Radius must be positive, got {radius}")
    shape = (dim,) if size is None else (size, dim)
    points = rng.standard_normal(shape)
    norms = np.linalg.norm(points, axis=-1, keepdims=True)
    return radius * points / norms


def block_sizes(samples, block_size):
    full, rest = divmod(samples, block_size)
    return [block_size] * full + ([rest] if rest else [])


def radius_counts(seed, k, radius, samples, block_size, tol, tol_c):
    """Number of physical and of separable states among sphere samples at one radius"""
    physical = separable = 0
    for block, size in enumerate(block_sizes(samples, block_size)):
        if radius == 0:
            points = np.zeros((size, DIMENSION))
        else:
            points = sample_sphere(DIMENSION, radius, substream(seed, k, block), size)
        mask = is_physical(points, tol)
        physical += int(mask.sum())
        if mask.any():
            separable += int((concurrence_values(points[mask]) <= tol_c).sum())
    return physical, separable
