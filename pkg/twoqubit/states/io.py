"""State files: {"n": [...]} or {"rho_re": [[...]], "rho_im": [[...]]}"""

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import ValidationError
from twoqubit.core.utils import read_json, write_json

# Local
from .polarization import as_vector, to_polarization


def state_from_dict(data):
    if "n" in data:
        return as_vector(data["n"])
    if "rho_re" in data:
        rho = np.asarray(data["rho_re"], dtype=float) + 1j * np.asarray(
            data.get("rho_im", np.zeros((4, 4))), dtype=float
        )
        return to_polarization(rho)
    raise ValidationError('A state needs either "n" or "rho_re"/"rho_im"')


def read_state(path):
    return state_from_dict(read_json(path))


def write_state(path, n, info):
    write_json(path, {"n": as_vector(n)}, info)
