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
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.morphisms import MorphismsManager


class PowersetClaim(ClaimBase):
    """One instance per k = 0..n_max"""

    constructions = ConstructionsManager()

    def strata(self, n_max):
        return [Stratum((k,), (1,)) for k in range(0, n_max + 1)]


class PowersetValid(PowersetClaim):
    claim_id = 'POWERSET_VALID'
    anchor = "(subset, subset) on a power set is a binary poset"

    def materialize(self, stratum, coords):
        return {'P': self.constructions.powerset_biposet(stratum.scale[0])}

    def check(self, instance):
        verdict = self.axioms.check_axioms(instance['P'].d)
        if verdict.passed:
            return None
        return {'failed': [result.name for result in verdict.failures()]}


class PowersetSelfDual(PowersetClaim):
    claim_id = 'POWERSET_SELF_DUAL'
    anchor = "a power set under (subset, subset) is self dual via complements"
    mapping_types = {'psi': ('P', 'P')}

    morphisms = MorphismsManager()

    def materialize(self, stratum, coords):
        k = stratum.scale[0]
        return {
            'P': self.constructions.powerset_biposet(k),
            'psi': self.constructions.complement_mapping(k),
        }

    def check(self, instance):
        bp = instance['P']
        verdict = self.morphisms.is_isomorphism(
            instance['psi'], bp, self.constructions.dual_biposet(bp))
        if verdict.holds:
            return None
        return {'reason': verdict.reason, 'triple': list(verdict.witness or ())}
