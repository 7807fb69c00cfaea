# Third Party
import factory

# TwoQubit
from twoqubit.dynamics.params import D3Params, Dephasing, WernerFamily, YEParams, ZJParams


class D3ParamsFactory(factory.Factory):
    """Markovian dephasing of Phi+"""

    g = 0.5
    gamma = 1.0
    B0 = 1.0

    class Meta:
        model = D3Params


class YEParamsFactory(factory.Factory):
    Gamma = 1.0
    a0 = 0.5

    class Meta:
        model = YEParams


class ZJParamsFactory(factory.Factory):
    """Pure RTN dephasing of a Phi Werner state"""

    r = 0.5
    phi = 0.0
    B0 = 0.1
    Gamma1 = 0.0
    dephasing = Dephasing.RTN
    g = 0.1
    gamma = 0.5
    family = WernerFamily.PHI

    class Meta:
        model = ZJParams
