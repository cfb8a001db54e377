"""
Django base settings for biposets project.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

# Stdlib imports
import os
import json

# Core Django imports
from django.core.exceptions import ImproperlyConfigured

__all__ = [
    'BASE_DIR',
    'SECRET_KEY',
    'INSTALLED_APPS',
    'DATABASES',
    'DEFAULT_AUTO_FIELD',
    'LANGUAGE_CODE',
    'TIME_ZONE',
    'USE_I18N',
    'USE_TZ',
    'CELERY_BROKER_URL',
    'CELERY_RESULT_BACKEND',
    'CELERY_TASK_SERIALIZER',
    'CELERY_RESULT_SERIALIZER',
    'CELERY_ACCEPT_CONTENT',
    'CELERY_ENABLE_UTC',
    'BIPOSET_POWERSET_MAX_K',
    'BIPOSET_ENUMERATION_MAX_N',
    'BIPOSET_ENUMERATION_CACHE_MAX_N',
    'BIPOSET_GALOIS_MAX_SCALE',
    'ORACLE_DEFAULT_BUDGET',
    'ORACLE_DEFAULT_SEED',
    'ORACLE_DEFAULT_WORKERS',
]

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def get_secret(config_var):
    """Get the secret variable or return explicit exception."""
    file_location = os.path.dirname(os.path.abspath(__file__)) + "/"
    try:
        with open(file_location + "keys.json") as f:
            return json.loads(f.read())[config_var]
    except FileNotFoundError:
        with open(file_location + "keys.json.example") as f:
            return json.loads(f.read()).get(config_var, '')
    except KeyError:
        error_msg = "Set the {0} environment variable.".format(config_var)
        raise ImproperlyConfigured(error_msg)


def app_config_vars(var):
    return os.environ[var] if os.environ.get(var) else get_secret(var)


def int_config_vars(var, default):
    """Integer knob from the environment, falling back to default."""
    value = os.environ.get(var)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ImproperlyConfigured("{0} must be an integer, got {1!r}.".format(var, value))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = app_config_vars('DJANGO_SECRET_KEY')

# Application definition

INSTALLED_APPS = [
    'explorer.apps.ExplorerConfig',
    'django.contrib.contenttypes',
]

# No models are defined; the database is only there to keep django.test happy.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

# Celery: oracle partitions are dispatched as tasks

CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', 'redis://localhost:6379')
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_ACCEPT_CONTENT = ['json']
CELERY_ENABLE_UTC = True

# Binary poset library knobs

# 2^k elements get materialized as 2^k x 2^k matrices
BIPOSET_POWERSET_MAX_K = int_config_vars('BIPOSET_POWERSET_MAX_K', 12)
BIPOSET_ENUMERATION_MAX_N = int_config_vars('BIPOSET_ENUMERATION_MAX_N', 4)
# scales at or below this are enumerated into an in-process pool
BIPOSET_ENUMERATION_CACHE_MAX_N = int_config_vars('BIPOSET_ENUMERATION_CACHE_MAX_N', 3)
BIPOSET_GALOIS_MAX_SCALE = int_config_vars('BIPOSET_GALOIS_MAX_SCALE', 3)

ORACLE_DEFAULT_BUDGET = int_config_vars('ORACLE_DEFAULT_BUDGET', 200000)
ORACLE_DEFAULT_SEED = int_config_vars('ORACLE_DEFAULT_SEED', 20240218)
ORACLE_DEFAULT_WORKERS = int_config_vars('ORACLE_DEFAULT_WORKERS', 1)
