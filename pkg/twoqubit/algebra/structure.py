# Standard Library
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache

# Third Party
import numpy as np

# Local
from .generators import GENERATORS, as_index

logger = logging.getLogger(__name__)

# nonzero entries up to symmetry, as (i, j, k, value)
TABULATED_F = (
    (1, 2, 3, 1),
    (1, 6, 7, 1),
    (1, 10, 11, 1),
    (1, 14, 15, 1),
    (2, 5, 7, -1),
    (2, 9, 11, -1),
    (2, 13, 15, -1),
    (3, 5, 6, 1),
    (3, 9, 10, 1),
    (3, 13, 14, 1),
    (4, 8, 12, 1),
    (4, 9, 13, 1),
    (4, 10, 14, 1),
    (4, 11, 15, 1),
    (5, 8, 13, 1),
    (5, 9, 12, 1),
    (6, 8, 14, 1),
    (6, 10, 12, 1),
    (7, 8, 15, 1),
    (7, 11, 12, 1),
)
TABULATED_D = (
    (1, 4, 5, 1),
    (1, 8, 9, 1),
    (1, 12, 13, 1),
    (2, 4, 6, 1),
    (2, 8, 10, 1),
    (2, 12, 14, 1),
    (3, 4, 7, 1),
    (3, 8, 11, 1),
    (3, 12, 15, 1),
    (5, 10, 15, -1),
    (5, 11, 14, 1),
    (6, 9, 15, 1),
    (6, 11, 13, -1),
    (7, 9, 14, -1),
    (7, 10, 13, 1),
)


@dataclass(frozen=True)
class StructureConstants:
    """f (totally antisymmetric) and d (totally symmetric), zero-based arrays"""

    f: np.ndarray
    d: np.ndarray

    def f_ijk(self, i, j, k):
        return float(self.f[as_index(i) - 1, as_index(j) - 1, as_index(k) - 1])

    def d_ijk(self, i, j, k):
        return float(self.d[as_index(i) - 1, as_index(j) - 1, as_index(k) - 1])


@lru_cache(maxsize=None)
def structure_constants():
    """f_ijk = Tr([mu_i, mu_j] mu_k) / 8i and d_ijk = Tr({mu_i, mu_j} mu_k) / 8"""
    products = np.einsum("iab,jbc->ijac", GENERATORS, GENERATORS)
    commutators = products - products.transpose(1, 0, 2, 3)
    anticommutators = products + products.transpose(1, 0, 2, 3)
    f = (np.einsum("ijab,kba->ijk", commutators, GENERATORS) / 8j).real
    d = (np.einsum("ijab,kba->ijk", anticommutators, GENERATORS) / 8).real
    f.setflags(write=False)
    d.setflags(write=False)
    return StructureConstants(f=f, d=d)


def _permutation_sign(permutation):
    inversions = sum(
        1
        for a, b in itertools.combinations(range(len(permutation)), 2)
        if permutation[a] > permutation[b]
    )
    return -1 if inversions % 2 else 1


def tabulated_tables():
    """Expand the tabulated entries to full 15x15x15 tables"""
    f = np.zeros((15, 15, 15))
    d = np.zeros((15, 15, 15))
    for table, entries, antisymmetric in ((f, TABULATED_F, True), (d, TABULATED_D, False)):
        for i, j, k, value in entries:
            for permutation in itertools.permutations(range(3)):
                index = tuple((i, j, k)[p] - 1 for p in permutation)
                sign = _permutation_sign(permutation) if antisymmetric else 1
                table[index] = sign * value
    return f, d


def check_structure_constants(tolerance=1e-12):
    """Compare the computed constants with the tabulated ones

    Returns a list of human readable mismatches, empty when everything agrees.
    """
    constants = structure_constants()
    expected_f, expected_d = tabulated_tables()
    mismatches = []
    for name, computed, expected in (
        ("f", constants.f, expected_f),
        ("d", constants.d, expected_d),
    ):
        for i, j, k in zip(*np.nonzero(np.abs(computed - expected) > tolerance)):
            mismatches.append(
                f"{name}({i + 1},{j + 1},{k + 1}) computed {computed[i, j, k]:g} "
                f"tabulated {expected[i, j, k]:g}"
            )
    logger.debug("Structure constant check: %d mismatches", len(mismatches))
    return mismatches
