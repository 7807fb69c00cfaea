"""Model parameters

Each model takes a frozen dataclass; values are checked on construction and
string values (from the command line or a config file) are coerced.
"""

# Standard Library
import dataclasses
import enum
from dataclasses import dataclass

# Third Party
import numpy as np

# TwoQubit
from twoqubit.core.exceptions import DomainError


class WernerFamily(enum.Enum):
    PHI = "phi"
    PSI = "psi"


class Dephasing(enum.Enum):
    RTN = "rtn"
    EXPONENTIAL = "exponential"


def _coerce(params):
    """Convert field values to the type of the field default"""
    for field in dataclasses.fields(params):
        value = getattr(params, field.name)
        default = field.default
        try:
            if isinstance(default, enum.Enum) and not isinstance(value, enum.Enum):
                value = type(default)(str(value).lower())
            elif isinstance(default, bool) and isinstance(value, str):
                if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(value)
                value = value.lower() in ("true", "1", "yes")
            elif isinstance(default, float) and not isinstance(value, bool):
                value = float(value)
        except ValueError:
            raise DomainError(f"Invalid value {value!r} for parameter {field.name}") from None
        object.__setattr__(params, field.name, value)


def _require(condition, message):
    if not condition:
        raise DomainError(message)


@dataclass(frozen=True)
class D3Params:
    """RTN dephasing of a Bell pair: coupling g, switching rate gamma, field B0

    (x0, y0, z0) is the effective Bloch vector in span{|00>, |11>}.
    """

    g: float = 0.5
    gamma: float = 1.0
    B0: float = 1.0
    x0: float = 1.0
    y0: float = 0.0
    z0: float = 0.0

    def __post_init__(self):
        _coerce(self)
        _require(self.g >= 0, f"g must be non-negative, got {self.g}")
        _require(self.gamma >= 0, f"gamma must be non-negative, got {self.gamma}")
        bloch = np.hypot(np.hypot(self.x0, self.y0), self.z0)
        _require(bloch <= 1 + 1e-12, f"Initial Bloch vector has norm {bloch:.6g} > 1")


@dataclass(frozen=True)
class YEParams:
    """Spontaneous emission of both qubits at rate Gamma from the a0 family"""

    Gamma: float = 1.0
    a0: float = 0.5

    def __post_init__(self):
        _coerce(self)
        _require(0 <= self.a0 <= 1, f"a0 must lie in [0, 1], got {self.a0}")
        _require(self.Gamma > 0, f"Gamma must be positive, got {self.Gamma}")


@dataclass(frozen=True)
class ZJParams:
    """Generalized Werner states under dephasing and relaxation

    The dephasing function is RTN (g, gamma) or exponential (Gamma2). With
    ``relaxation_dephasing`` the coherences also decay at Gamma1 / 2.
    """

    r: float = 1.0
    phi: float = 0.0
    B0: float = 0.0
    Gamma1: float = 0.0
    dephasing: Dephasing = Dephasing.RTN
    g: float = 0.1
    gamma: float = 0.5
    Gamma2: float = 1.0
    family: WernerFamily = WernerFamily.PHI
    relaxation_dephasing: bool = True

    def __post_init__(self):
        _coerce(self)
        _require(0 < self.r <= 1, f"r must lie in (0, 1], got {self.r}")
        _require(self.Gamma1 >= 0, f"Gamma1 must be non-negative, got {self.Gamma1}")
        _require(self.g >= 0 and self.gamma >= 0, "g and gamma must be non-negative")
        _require(self.Gamma2 >= 0, f"Gamma2 must be non-negative, got {self.Gamma2}")


def parameter_names(params_class):
    return [field.name for field in dataclasses.fields(params_class)]


def build_params(params_class, values=None, base=None):
    """Instantiate ``params_class`` from a mapping of (possibly string) values"""
    values = dict(values or {})
    unknown = set(values) - set(parameter_names(params_class))
    if unknown:
        raise DomainError(
            f"Unknown parameter(s) for {params_class.__name__}: {', '.join(sorted(unknown))}"
        )
    if base is not None:
        return dataclasses.replace(base, **values)
    return params_class(**values)


def params_dict(params):
    return {
        name: value.value if isinstance(value, enum.Enum) else value
        for name, value in dataclasses.asdict(params).items()
    }
