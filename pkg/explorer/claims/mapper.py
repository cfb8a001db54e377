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

from collections import OrderedDict

from slugify import slugify

from explorer.claims.duality import DoubleDual, DualityPrinciple
from explorer.claims.extremal import UniqueGmax, UniqueGmin, UniqueLmax, UniqueLmin
from explorer.claims.galois import (
    AdjointUnique, GaloisAsymmetry, GaloisCharacterizationBackward, GaloisCharacterizationForward,
    GaloisCompose
)
from explorer.claims.intersection import IntersectClosure
from explorer.claims.isotone import IsoIffIsotone
from explorer.claims.powerset import PowersetSelfDual, PowersetValid
from explorer.constants import CLAIM_IDS
from explorer.exceptions import UsageError
from explorer.managers import BaseManager

__all__ = ['ClaimMapper']


class ClaimMapper(BaseManager):
    """Claim identifiers to claim classes"""
    CLAIMS = OrderedDict([
        ('INTERSECT_CLOSURE', IntersectClosure),        # intersections stay valid
        ('UNIQUE_GMAX', UniqueGmax),                    # maximal greatest is unique
        ('UNIQUE_GMIN', UniqueGmin),                    # minimal greatest is unique
        ('UNIQUE_LMAX', UniqueLmax),                    # maximal least is unique
        ('UNIQUE_LMIN', UniqueLmin),                    # minimal least is unique
        ('POWERSET_VALID', PowersetValid),              # power sets are valid
        ('ISO_IFF_ISOTONE', IsoIffIsotone),             # isomorphism characterization
        ('DUALITY_PRINCIPLE', DualityPrinciple),        # duals stay valid
        ('POWERSET_SELF_DUAL', PowersetSelfDual),       # complement is a self-duality
        ('DOUBLE_DUAL', DoubleDual),                    # double dual is isomorphic
        ('GALOIS_THM11_FWD', GaloisCharacterizationForward),   # connection implies properties
        ('GALOIS_THM11_BWD', GaloisCharacterizationBackward),  # properties imply connection
        ('GALOIS_COMPOSE', GaloisCompose),              # connections compose
        ('ADJOINT_UNIQUE', AdjointUnique),              # adjoints are unique
        ('GALOIS_ASYMMETRY', GaloisAsymmetry),          # connections need not be symmetric
    ])

    @staticmethod
    def normalize(name):
        return slugify(name or '', separator='_').upper()

    def claim_ids(self):
        """Registered identifiers, in CLAIM_IDS order"""
        missing = [claim_id for claim_id in CLAIM_IDS if claim_id not in self.CLAIMS]
        if missing or len(self.CLAIMS) != len(CLAIM_IDS):
            raise UsageError("claim registry out of step with CLAIM_IDS: %s"
                             % (', '.join(missing) or 'extra claims'))
        return list(CLAIM_IDS)

    def get(self, name):
        """Claim instance for an identifier, case and separator insensitive"""
        claim_id = self.normalize(name)
        if claim_id not in self.CLAIMS:
            raise UsageError("unknown claim %s; known: %s" % (name, ', '.join(self.claim_ids())))
        return self.CLAIMS[claim_id]()
