# Django
from celery import Celery
from django.apps import AppConfig, apps
from django.conf import settings

# Standard Library
import logging
import os

logger = logging.getLogger(__name__)

if not settings.configured:
    os.environ.setdefault(
        "DJANGO_SETTINGS_MODULE", "config.settings.local"
    )  # pragma: no cover


app = Celery("twoqubit")


class CeleryAppConfig(AppConfig):
    name = "twoqubit.taskapp"
    verbose_name = "Monte Carlo workers"

    def ready(self):
        app.config_from_object("django.conf:settings", namespace="CELERY")
        # one radius per task, each a long block loop
        app.conf.worker_prefetch_multiplier = 1
        app.conf.task_acks_late = True
        installed_apps = [app_config.name for app_config in apps.get_app_configs()]
        app.autodiscover_tasks(lambda: installed_apps, force=True)
        logger.debug(
            "celery ready, eager=%s broker=%s",
            app.conf.task_always_eager,
            app.conf.broker_url,
        )
