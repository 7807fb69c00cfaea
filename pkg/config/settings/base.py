"""
Base settings to build other settings files upon.
"""

# Third Party
import environ

ROOT_DIR = environ.Path(__file__) - 3  # (twoqubit/config/settings/base.py - 3 = twoqubit/)
APPS_DIR = ROOT_DIR.path("twoqubit")

env = environ.Env()

READ_DOT_ENV_FILE = env.bool("DJANGO_READ_DOT_ENV_FILE", default=False)
if READ_DOT_ENV_FILE:
    # OS environment variables take precedence over variables from .env
    env.read_env(str(ROOT_DIR.path(".env")))

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = env.bool("DJANGO_DEBUG", False)
# https://docs.djangoproject.com/en/dev/ref/settings/#secret-key
SECRET_KEY = env("DJANGO_SECRET_KEY", default="")
# https://docs.djangoproject.com/en/dev/ref/settings/#use-tz
USE_TZ = True

# DATABASES
# ------------------------------------------------------------------------------
# Nothing is stored; every command reads and writes plain files
DATABASES = {}

# APPS
# ------------------------------------------------------------------------------
LOCAL_APPS = [
    "twoqubit.core",
    "twoqubit.algebra.apps.AlgebraConfig",
    "twoqubit.states.apps.StatesConfig",
    "twoqubit.sections.apps.SectionsConfig",
    "twoqubit.montecarlo.apps.MonteCarloConfig",
    "twoqubit.channels.apps.ChannelsConfig",
    "twoqubit.dynamics.apps.DynamicsConfig",
    "twoqubit.classifier.apps.ClassifierConfig",
]
# https://docs.djangoproject.com/en/dev/ref/settings/#installed-apps
INSTALLED_APPS = LOCAL_APPS

# Celery
# ------------------------------------------------------------------------------
INSTALLED_APPS += ["twoqubit.taskapp.celery.CeleryAppConfig"]
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-broker_url
CELERY_BROKER_URL = env("REDIS_URL", default="redis://localhost:6379/0")
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-result_backend
CELERY_RESULT_BACKEND = CELERY_BROKER_URL
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-accept_content
CELERY_ACCEPT_CONTENT = ["json"]
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-task_serializer
CELERY_TASK_SERIALIZER = "json"
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-result_serializer
CELERY_RESULT_SERIALIZER = "json"
# http://docs.celeryproject.org/en/latest/userguide/configuration.html#std:setting-task_always_eager
# Monte Carlo runs in process unless a worker pool is configured
CELERY_TASK_ALWAYS_EAGER = env.bool("CELERY_TASK_ALWAYS_EAGER", default=True)
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_REDIS_MAX_CONNECTIONS = env.int("CELERY_REDIS_MAX_CONNECTIONS", default=10)

# LOGGING
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#logging
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s "
            "%(process)d %(thread)d %(message)s"
        }
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        }
    },
    "root": {"level": "WARNING", "handlers": ["console"]},
    "loggers": {
        "twoqubit": {
            "level": env("TWOQUBIT_LOG_LEVEL", default="INFO"),
            "handlers": ["console"],
            "propagate": False,
        }
    },
}

# Your stuff...
# ------------------------------------------------------------------------------
TWOQUBIT_DEFAULT_SEED = env.int("TWOQUBIT_SEED", default=20111)
TWOQUBIT_POSITIVITY_TOL = env.float("TWOQUBIT_POSITIVITY_TOL", default=1e-10)
TWOQUBIT_CONCURRENCE_TOL = env.float("TWOQUBIT_CONCURRENCE_TOL", default=1e-9)
TWOQUBIT_MC_SAMPLES = env.int("TWOQUBIT_MC_SAMPLES", default=10 ** 6)
TWOQUBIT_MC_RADIAL_STEPS = env.int("TWOQUBIT_MC_RADIAL_STEPS", default=50)
TWOQUBIT_MC_BLOCK_SIZE = env.int("TWOQUBIT_MC_BLOCK_SIZE", default=100000)
TWOQUBIT_HISTOGRAM_BINS = env.int("TWOQUBIT_HISTOGRAM_BINS", default=50)
TWOQUBIT_SECTION_SAMPLES = env.int("TWOQUBIT_SECTION_SAMPLES", default=400)
TWOQUBIT_SUBSPACE_SAMPLES = env.int("TWOQUBIT_SUBSPACE_SAMPLES", default=101)
TWOQUBIT_TRAJECTORY_SAMPLES = env.int("TWOQUBIT_TRAJECTORY_SAMPLES", default=2000)
TWOQUBIT_DECAY_DEPTH = env.float("TWOQUBIT_DECAY_DEPTH", default=40.0)
TWOQUBIT_POINT_WIDTH = env.int("TWOQUBIT_POINT_WIDTH", default=2)
TWOQUBIT_CRITICAL_STEPS = env.int("TWOQUBIT_CRITICAL_STEPS", default=11)
TWOQUBIT_CRITICAL_TOL = env.float("TWOQUBIT_CRITICAL_TOL", default=1e-6)
