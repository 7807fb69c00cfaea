# Third Party
from pytest_factoryboy import register

# Local
from .factories import TrajectoryFactory

register(TrajectoryFactory)
