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


from celery import shared_task
from celery.utils.log import get_task_logger

from explorer.managers.oracle import OracleManager


logger = get_task_logger(__name__)


@shared_task()
def task_verify_claim_chunk(claim_id, n_max, budget, seed, start, stop):
    """visit one contiguous slice of a claim's instance space"""

    logger.info("Starting task_verify_claim_chunk %s [%s, %s) .." % (claim_id, start, stop))
    return OracleManager().run_chunk(claim_id, n_max, budget, seed, start, stop)
