"""The fifteen two-qubit generators sigma_a (x) sigma_b and their numbering

The numbering IX = 1 ... ZZ = 15 is used for every polarization vector, transfer
matrix and file format in the package.
"""

# Standard Library
import enum

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import DomainError

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# lexicographic over IXYZ with II dropped, so label "ab" has number 4a + b
LABELS = tuple(a + b for a in "IXYZ" for b in "IXYZ")[1:]

GeneratorIndex = enum.IntEnum("GeneratorIndex", LABELS)

GENERATORS = np.array([np.kron(PAULI[label[0]], PAULI[label[1]]) for label in LABELS])
GENERATORS.setflags(write=False)

IDENTITY = np.eye(4, dtype=complex)
SPIN_FLIP = np.kron(PAULI["Y"], PAULI["Y"])


class CommutationClass(enum.Enum):
    COMMUTE = "S"
    ANTICOMMUTE = "D"


def as_index(value):
    """Coerce an integer or a label such as "XX" into a GeneratorIndex"""
    if isinstance(value, GeneratorIndex):
        return value
    if isinstance(value, str):
        label = value.strip().upper()
        if label in GeneratorIndex.__members__:
            return GeneratorIndex[label]
        if label.isdigit():
            value = int(label)
        else:
            raise DomainError(f"Unknown generator label {value!r}")
    try:
        return GeneratorIndex(int(value))
    except (TypeError, ValueError):
        raise DomainError(f"Generator index must be in 1..15, got {value!r}") from None


def generator(i):
    """The 4x4 matrix mu_i for 1 <= i <= 15"""
    return GENERATORS[as_index(i) - 1].copy()


def commutation_class(i, j):
    i, j = as_index(i), as_index(j)
    if i == j:
        raise DomainError(f"Commutation class needs two distinct generators, got {i.name}")
    mu_i, mu_j = GENERATORS[i - 1], GENERATORS[j - 1]
    if np.allclose(mu_i @ mu_j, mu_j @ mu_i, atol=1e-12):
        return CommutationClass.COMMUTE
    return CommutationClass.ANTICOMMUTE
