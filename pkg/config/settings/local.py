# Local
from .base import *  # noqa
from .base import env

# GENERAL
# ------------------------------------------------------------------------------
DEBUG = env.bool("DJANGO_DEBUG", default=True)
SECRET_KEY = env("DJANGO_SECRET_KEY", default="twoqubit-local-only-not-secret")

# Celery
# ------------------------------------------------------------------------------
# Monte Carlo runs in process unless `inv celeryworker` is up
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=True)

# LOGGING
# ------------------------------------------------------------------------------
LOGGING["loggers"]["twoqubit"]["level"] = env(  # noqa F405
    "TWOQUBIT_LOG_LEVEL", default="DEBUG"
)
