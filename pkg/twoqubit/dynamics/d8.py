"""Geometry of the triplet subspace

States without singlet population live in the three-level space with basis
(|T>, |00>, |11>), |T> = (|01> + |10>)/sqrt(2), and are written
rho = I/3 + (1/2) sum_i m_i lambda_i with the Gell-Mann matrices lambda_i.

With a = |rho_23| = sqrt(m6^2 + m7^2)/2 and b = sqrt(rho_22 rho_33) the Wootters
values are {a + b, b - a, p_T, 0}, p_T = rho_11, when the state has no coherence
with |T> (m1 = m2 = m4 = m5 = 0). Then C = max(0, 2a - p_T, p_T - 2b), which is
2 min(a, b) on the p_T = 0 face.
"""

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.constants import CONCURRENCE_TOL, POSITIVITY_TOL
from twoqubit.core.exceptions import ValidationError
from twoqubit.states.concurrence import concurrence
from twoqubit.states.polarization import to_polarization

SQRT3 = np.sqrt(3)

GELL_MANN = np.array(
    [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
        np.diag([1, 1, -2]) / SQRT3,
    ],
    dtype=complex,
)

# columns are |T>, |00>, |11> in the two-qubit basis |00>, |01>, |10>, |11>
EMBEDDING = np.array(
    [
        [0, 1, 0],
        [1 / np.sqrt(2), 0, 0],
        [1 / np.sqrt(2), 0, 0],
        [0, 0, 1],
    ],
    dtype=complex,
)

# the components coupling |T> to |00> and |11>
TRIPLET_COHERENCES = (0, 1, 3, 4)


def triplet_density(m):
    m = np.asarray(m, dtype=float)
    if m.shape != (8,):
        raise ValidationError(f"A triplet state has 8 components, got shape {m.shape}")
    return np.eye(3) / 3 + np.einsum("i,iab->ab", m, GELL_MANN) / 2


def triplet_components(rho):
    """m_i = Tr(rho lambda_i)"""
    return np.einsum("ab,iba->i", np.asarray(rho, dtype=complex), GELL_MANN).real


def check_triplet(m, tol=POSITIVITY_TOL):
    rho = triplet_density(m)
    smallest = float(np.linalg.eigvalsh(rho)[0])
    if smallest < -tol:
        raise ValidationError(f"Triplet state is not positive (eigenvalue {smallest:.3g})")
    return rho


def embed(m):
    """Polarization vector of the triplet state in the two-qubit space"""
    rho = EMBEDDING @ triplet_density(m) @ EMBEDDING.conj().T
    return to_polarization(rho)


def d8_ab(m, tol=POSITIVITY_TOL):
    m = np.asarray(m, dtype=float)
    a = np.hypot(m[5], m[6]) / 2
    radicand = 2 - SQRT3 * (SQRT3 * m[2] + m[7]) + 3 * m[7] * (SQRT3 * m[2] - m[7])
    if radicand < -tol:
        raise ValidationError(f"Negative population product {radicand:.3g}")
    b = np.sqrt(2) / 6 * np.sqrt(max(radicand, 0.0))
    return float(a), float(b)


def is_decoupled(m, tol=POSITIVITY_TOL):
    return bool(np.all(np.abs(np.asarray(m, dtype=float)[list(TRIPLET_COHERENCES)]) <= tol))


def d8_lambdas(m, tol=POSITIVITY_TOL):
    """Closed-form Wootters values of a state without coherence to |T>"""
    rho = check_triplet(m, tol)
    if not is_decoupled(m, tol):
        raise ValidationError("Closed-form values need m1 = m2 = m4 = m5 = 0")
    a, b = d8_ab(m, tol)
    triplet_population = float(rho[0, 0].real)
    return tuple(sorted((a + b, abs(b - a), triplet_population, 0.0), reverse=True))


def d8_concurrence(m, tol=POSITIVITY_TOL):
    check_triplet(m, tol)
    if not is_decoupled(m, tol):
        return concurrence(embed(m), tol=tol).C
    lambdas = d8_lambdas(m, tol)
    return max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3])


def d8_separable(m, tol_c=CONCURRENCE_TOL, tol=POSITIVITY_TOL):
    return d8_concurrence(m, tol) <= tol_c
