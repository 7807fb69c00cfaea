# Django
from django.apps import AppConfig


class MonteCarloConfig(AppConfig):
    name = "twoqubit.montecarlo"
    verbose_name = "Monte Carlo"
