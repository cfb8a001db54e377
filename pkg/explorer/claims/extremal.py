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

from explorer.claims import StructureClaim
from explorer.managers.extremal import ExtremalManager


class UniqueExtreme(StructureClaim):
    """The sup/inf rule yields at most one value for one extremal element"""

    value_name = None

    extremal = ExtremalManager()

    def check(self, instance):
        bp = instance['P']
        values = self.extremal.extreme_values(bp)[self.value_name]
        if len(values) <= 1:
            return None
        return {self.value_name: [bp.ground.labels[i] for i in values]}


class UniqueGmax(UniqueExtreme):
    claim_id = 'UNIQUE_GMAX'
    anchor = "the maximal greatest element is unique"
    value_name = 'g_max'


class UniqueGmin(UniqueExtreme):
    claim_id = 'UNIQUE_GMIN'
    anchor = "the minimal greatest element is unique"
    value_name = 'g_min'


class UniqueLmax(UniqueExtreme):
    claim_id = 'UNIQUE_LMAX'
    anchor = "the maximal least element is unique"
    value_name = 'l_max'


class UniqueLmin(UniqueExtreme):
    claim_id = 'UNIQUE_LMIN'
    anchor = "the minimal least element is unique"
    value_name = 'l_min'
