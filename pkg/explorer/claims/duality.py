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
from explorer.converters.bpo import serialize_structure
from explorer.ds import Mapping
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.morphisms import MorphismsManager


class DualityPrinciple(StructureClaim):
    claim_id = 'DUALITY_PRINCIPLE'
    anchor = "the dual of a binary poset is a binary poset"

    constructions = ConstructionsManager()

    def check(self, instance):
        dual = self.constructions.dual_biposet(instance['P'])
        verdict = self.axioms.check_axioms(dual.d)
        if verdict.passed:
            return None
        details = {'dual': serialize_structure(dual)}
        for result in verdict.failures():
            details[result.name] = [dual.ground.labels[i] for i in result.witness]
            if result.detail:
                details['%s_conclusion' % result.name] = result.detail
        return details


class DoubleDual(StructureClaim):
    claim_id = 'DOUBLE_DUAL'
    anchor = "a binary poset is isomorphic to its double dual"

    constructions = ConstructionsManager()
    morphisms = MorphismsManager()

    def check(self, instance):
        bp = instance['P']
        double = self.constructions.dual_biposet(self.constructions.dual_biposet(bp))
        if double.d != bp.d:
            return {'reason': "double transpose changed the bits"}
        verdict = self.morphisms.is_isomorphism(Mapping.identity(bp.n), bp, double)
        if verdict.holds:
            return None
        return {'reason': verdict.reason, 'triple': list(verdict.witness or ())}
