# Third Party
from pytest_factoryboy import register

# Local
from .factories import D3ParamsFactory, YEParamsFactory, ZJParamsFactory

register(D3ParamsFactory, "d3_params")
register(YEParamsFactory, "ye_params")
register(ZJParamsFactory, "zj_params")
