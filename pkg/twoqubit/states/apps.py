# Django
from django.apps import AppConfig


class StatesConfig(AppConfig):
    name = "twoqubit.states"
    verbose_name = "States"
