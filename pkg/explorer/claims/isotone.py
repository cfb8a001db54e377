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

from functools import lru_cache

import numpy as np

from explorer.claims import StructureClaim
from explorer.ds import Mapping
from explorer.managers.enumeration import permutation_table
from explorer.managers.morphisms import MorphismsManager


class IsoIffIsotone(StructureClaim):
    """
    A bijection is an isomorphism iff it and its inverse are isotone.

    One instance per P; every Q on the same ground size and every
    permutation f: P -> Q are compared in a single pass.
    """

    claim_id = 'ISO_IFF_ISOTONE'
    anchor = "isomorphisms are the isotone bijections with isotone inverse"
    scale_settings = ('BIPOSET_ENUMERATION_CACHE_MAX_N',)
    mapping_types = {'f': ('P', 'Q')}

    morphisms = MorphismsManager()

    @staticmethod
    @lru_cache(maxsize=None)
    def permuted_chains(pool):
        """chains[Q, f, a, b, c] = Q.chain(f a, f b, f c)"""
        perms = np.array(permutation_table(pool.n), dtype=np.intp)
        return pool.chain_stack[:, perms[:, :, None, None], perms[:, None, :, None], perms[:, None, None, :]]

    def check(self, instance):
        P = instance['P']
        pool = self.enumeration.pool(P.n)
        image, chains = self.permuted_chains(pool), P.d.chain_tensor
        axes = (2, 3, 4)
        forward = ~(chains & ~image).any(axis=axes)
        backward = ~(image & ~chains).any(axis=axes)
        isomorphism = (image == chains).all(axis=axes)
        hits = np.argwhere(isomorphism != (forward & backward))
        if not len(hits):
            return None
        q_index, f_index = (int(index) for index in hits[0])
        witness = {'P': P, 'Q': pool.get(q_index), 'f': Mapping(permutation_table(P.n)[f_index], P.n)}
        details = self.check_witness(witness) or {}
        details.update(Q=witness['Q'], f=witness['f'])
        return details

    def check_witness(self, instance):
        P, Q, f = instance['P'], instance['Q'], instance['f']
        isomorphism = self.morphisms.is_isomorphism(f, P, Q).holds
        forward = self.morphisms.is_isotone(f, P.d, Q.d).holds
        backward = self.morphisms.is_isotone(f.inverse(), Q.d, P.d).holds
        if isomorphism == (forward and backward):
            return None
        return {'isomorphism': isomorphism, 'isotone': forward, 'inverse_isotone': backward}
