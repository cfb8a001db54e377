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

from explorer.claims import ClaimBase, Stratum
from explorer.converters.bpo import serialize_structure
from explorer.ds import BiPoset
from explorer.managers.constructions import ConstructionsManager


class IntersectClosure(ClaimBase):
    """Intersections of valid structures on one set are valid"""

    claim_id = 'INTERSECT_CLOSURE'
    anchor = "intersections of binary posets are binary posets"
    arities = (2, 3)

    constructions = ConstructionsManager()

    def strata(self, n_max):
        strata = []
        for n in range(1, n_max + 1):
            size = self.enumeration.pool(n).size
            strata.extend(Stratum((n, arity), (size,) * arity) for arity in self.arities)
        return strata

    def materialize(self, stratum, coords):
        n, arity = stratum.scale
        structures = self.fetch(self.pools([n] * arity), coords)
        if structures is None:
            return None
        return {'d%i' % (i + 1): bp for i, bp in enumerate(structures)}

    def check(self, instance):
        operands = [instance[name] for name in sorted(instance)]
        meet = self.constructions.intersect_many(bp.d for bp in operands)
        verdict = self.axioms.check_axioms(meet)
        if verdict.passed:
            return None
        return {
            'intersection': serialize_structure(BiPoset(operands[0].ground, meet)),
            'failed': [result.name for result in verdict.failures()],
        }
