# Django
from django.apps import AppConfig


class ClassifierConfig(AppConfig):
    name = "twoqubit.classifier"
    verbose_name = "Classifier"
