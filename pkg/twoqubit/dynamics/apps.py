# Django
from django.apps import AppConfig


class DynamicsConfig(AppConfig):
    name = "twoqubit.dynamics"
    verbose_name = "Dynamics"
