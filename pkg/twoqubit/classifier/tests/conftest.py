# Third Party
from pytest_factoryboy import register

# TwoQubit
from twoqubit.dynamics.tests.factories import D3ParamsFactory, YEParamsFactory, ZJParamsFactory
from twoqubit.states.tests.factories import TrajectoryFactory

register(TrajectoryFactory)
register(D3ParamsFactory, "d3_params")
register(YEParamsFactory, "ye_params")
register(ZJParamsFactory, "zj_params")
