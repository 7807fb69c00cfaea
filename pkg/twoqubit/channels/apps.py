# Django
from django.apps import AppConfig


class ChannelsConfig(AppConfig):
    name = "twoqubit.channels"
    verbose_name = "Channels"
