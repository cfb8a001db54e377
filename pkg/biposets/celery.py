# Copyright 2024 The biposets authors.
# All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

from __future__ import absolute_import
import os
import sys
from celery import Celery


# set the default Django settings module for the 'celery' program.
MODE = os.getenv('BPO_APP_MODE', 'test' if sys.argv[1:2] == ['test'] else 'dev')
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'biposets.settings.%s' % MODE)
app = Celery('biposets')

# Using a string here means the worker will not have to
# pickle the object when using Windows.
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks(('explorer',))
