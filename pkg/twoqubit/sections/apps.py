# Django
from django.apps import AppConfig


class SectionsConfig(AppConfig):
    name = "twoqubit.sections"
    verbose_name = "Sections"
