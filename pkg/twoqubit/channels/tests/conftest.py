# Third Party
from pytest_factoryboy import register

# TwoQubit
from twoqubit.states.tests.factories import TrajectoryFactory

register(TrajectoryFactory)
