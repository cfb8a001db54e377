#!/usr/bin/env python
from __future__ import absolute_import
import os
import sys

# This will make sure the app is always imported when
# Django starts so that shared_task will use this app.
from .celery import app as celery_app


__appname__ = "biposets"
__version__ = '0.1'
__release__ = '0.1.0'
__description__ = "Construct, validate and explore finite binary posets."
__title__ = "Binary Poset Explorer"


__all__ = ['__appname__', '__version__', '__release__', '__description__', '__title__', 'celery_app']

MODE = os.getenv('BPO_APP_MODE', 'test' if sys.argv[1:2] == ['test'] else 'dev')


def prepare_env():
    # Update the default settings environment variable based on current mode.
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'biposets.settings.%s' % MODE)


def manage():
    # Prepare the environment.
    prepare_env()
    # Execute
    from django.core.management import execute_from_command_line
    execute_from_command_line(sys.argv)


def cli():
    # console script: `biposet <subcommand> ...`
    prepare_env()
    from django.core.management import execute_from_command_line
    execute_from_command_line([sys.argv[0], 'biposet'] + sys.argv[1:])
