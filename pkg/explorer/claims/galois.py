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

from functools import cached_property
from itertools import product

import numpy as np

from explorer.claims import ClaimBase, Stratum, scale_key
from explorer.constants import ADJOINT_SIDES
from explorer.ds import GaloisPair, Mapping
from explorer.managers.enumeration import map_table, mapping_from_index
from explorer.managers.galois import GaloisManager


def _image_chains(chains, table):
    """chains[..., m, a, b, c] = chains[..., F(a), F(b), F(c)] for every row F of table"""
    return chains[..., table[:, :, None, None], table[:, None, :, None], table[:, None, None, :]]


class ConnectionTables(object):
    """
    One P against every Q in a cached pool: each property of a candidate
    pair f: P -> Q, g: Q -> P as a boolean array. Axes are named in the
    property docstrings; Q indexes the pool, f and g the map tables.
    """

    def __init__(self, P, pool):
        self.F = map_table(P.n, pool.n)
        self.G = map_table(pool.n, P.n)
        self.p_leq = P.d.leq_matrix
        self.p_chains = P.d.chain_tensor
        self.q_leq = pool.leq_stack
        self.q_chains = pool.chain_stack

    @cached_property
    def connected(self):
        """[Q, f, g]: f(a) <= b iff a <= g(b)"""
        left = self.q_leq[:, self.F, :]
        right = self.p_leq[:, self.G].transpose(1, 0, 2)
        return (left[:, :, None] == right[None, None]).all(axis=(3, 4))

    @cached_property
    def reverse_connected(self):
        """[Q, f, g]: g(b) <= a iff b <= f(a)"""
        left = self.p_leq[self.G]
        right = self.q_leq[:, :, self.F].transpose(0, 2, 1, 3)
        return (left[None, None] == right[:, :, None]).all(axis=(3, 4))

    @cached_property
    def f_isotone(self):
        """[Q, f]"""
        return ~(self.p_chains & ~_image_chains(self.q_chains, self.F)).any(axis=(2, 3, 4))

    @cached_property
    def g_isotone(self):
        """[Q, g]"""
        image = _image_chains(self.p_chains, self.G)
        return ~(self.q_chains[:, None] & ~image[None]).any(axis=(2, 3, 4))

    @cached_property
    def unit(self):
        """[f, g]: a <= g(f(a)) for every a"""
        gf = self.G[np.arange(len(self.G))[None, :, None], self.F[:, None, :]]
        return self.p_leq[np.arange(self.F.shape[1]), gf].all(axis=-1)

    @cached_property
    def counit(self):
        """[Q, f, g]: f(g(b)) <= b for every b"""
        fg = self.F[np.arange(len(self.F))[:, None, None], self.G[None, :, :]]
        return self.q_leq[:, fg, np.arange(self.G.shape[1])].all(axis=-1)

    @cached_property
    def adjoint_properties(self):
        """[Q, f, g]: both maps isotone, unit and counit"""
        return (self.f_isotone[:, :, None] & self.g_isotone[:, None, :]
                & self.unit[None] & self.counit)

    @cached_property
    def right_admissible(self):
        """[Q, f, b, y]: setting g(b) = y keeps the biconditional at b"""
        left = self.q_leq[:, self.F, :]
        return (left[..., None] == self.p_leq[:, None, :]).all(axis=2)

    @cached_property
    def left_admissible(self):
        """[Q, h, a, y]: setting f(a) = y keeps the biconditional at a, h: Q -> P given"""
        right = self.p_leq[:, self.G].transpose(1, 0, 2)
        return (self.q_leq[:, None, None, :, :] == right[None, :, :, None, :]).all(axis=-1)


class GaloisClaim(ClaimBase):
    """
    One instance per P and target size q. check() sweeps every Q of size
    q and every map from the table in one pass, then narrows the least
    hit down with check_witness(), which works on a single (P, Q, f).
    """

    scale_settings = ('BIPOSET_GALOIS_MAX_SCALE', 'BIPOSET_ENUMERATION_CACHE_MAX_N')
    mapping_types = {'f': ('P', 'Q'), 'g': ('Q', 'P')}

    galois = GaloisManager()

    def strata(self, n_max):
        return [Stratum((p, q), (self.enumeration.pool(p).size,))
                for p, q in sorted(product(range(1, n_max + 1), repeat=2), key=scale_key)]

    def materialize(self, stratum, coords):
        structures = self.fetch(self.pools(stratum.scale[:1]), coords)
        if structures is None:
            return None
        return {'P': structures[0], 'q': stratum.scale[1]}

    def given(self, instance):
        """Name of the map the sweep enumerates"""
        return 'f'

    def sweep(self, tables, given):
        """[Q, map] hit mask"""
        raise NotImplementedError

    def candidates(self, given, P, Q_n):
        """Table of every candidate for the given map, and its target size"""
        src, dst = self.mapping_types[given]
        sizes = {'P': P.n, 'Q': Q_n}
        return map_table(sizes[src], sizes[dst]), sizes[dst]

    def check(self, instance):
        P = instance['P']
        pool = self.enumeration.pool(instance['q'])
        given = self.given(instance)
        hits = np.argwhere(self.sweep(ConnectionTables(P, pool), given))
        if not len(hits):
            return None
        q_index, map_index = (int(index) for index in hits[0])
        table, dst_n = self.candidates(given, P, pool.n)
        witness = {name: value for name, value in instance.items() if name != 'q'}
        witness['Q'] = pool.get(q_index)
        witness[given] = Mapping(tuple(int(value) for value in table[map_index]), dst_n)
        details = self.check_witness(witness) or {}
        details.update({'Q': witness['Q'], given: witness[given]})
        return details

    def right_adjoints(self, instance):
        return self.galois.find_adjoint(instance['f'], instance['P'], instance['Q'], ADJOINT_SIDES[0])


class GaloisCharacterizationForward(GaloisClaim):
    claim_id = 'GALOIS_THM11_FWD'
    anchor = "a Galois connection has isotone maps, unit and counit"

    def sweep(self, tables, given):
        return (tables.connected & ~tables.adjoint_properties).any(axis=2)

    def check_witness(self, instance):
        P, Q = instance['P'], instance['Q']
        for g in self.right_adjoints(instance):
            report = self.galois.check_adjoint_properties(GaloisPair(instance['f'], g), P, Q)
            if not report.all_hold:
                details = {'g': g}
                details.update(report.as_dict())
                return details
        return None


class GaloisCharacterizationBackward(GaloisClaim):
    claim_id = 'GALOIS_THM11_BWD'
    anchor = "isotone maps with unit and counit form a Galois connection"

    def sweep(self, tables, given):
        return (tables.adjoint_properties & ~tables.connected).any(axis=2)

    def check_witness(self, instance):
        P, Q, f = instance['P'], instance['Q'], instance['f']
        if not self.galois.morphisms.is_isotone(f, P.d, Q.d).holds:
            return None
        for index in range(P.n ** Q.n):
            pair = GaloisPair(f, mapping_from_index(index, Q.n, P.n))
            if not self.galois.check_adjoint_properties(pair, P, Q).all_hold:
                continue
            verdict = self.galois.is_galois(pair, P, Q)
            if not verdict.holds:
                return {'g': pair.g, 'galois_witness': list(verdict.witness)}
        return None


class GaloisCompose(ClaimBase):
    """Instances (P, Q, R, f1, f2), every size up to n_max"""

    claim_id = 'GALOIS_COMPOSE'
    anchor = "Galois connections compose"
    scale_settings = ('BIPOSET_GALOIS_MAX_SCALE',)
    mapping_types = {'f1': ('P', 'Q'), 'g1': ('Q', 'P'), 'f2': ('Q', 'R'), 'g2': ('R', 'Q')}

    galois = GaloisManager()

    def strata(self, n_max):
        strata = []
        for p, q, r in sorted(product(range(1, n_max + 1), repeat=3), key=scale_key):
            P, Q, R = self.pools([p, q, r])
            strata.append(Stratum((p, q, r), (P.size, Q.size, R.size, q ** p, r ** q)))
        return strata

    def materialize(self, stratum, coords):
        p, q, r = stratum.scale
        structures = self.fetch(self.pools([p, q, r]), coords[:3])
        if structures is None:
            return None
        P, Q, R = structures
        return {
            'P': P, 'Q': Q, 'R': R,
            'f1': mapping_from_index(coords[3], p, q),
            'f2': mapping_from_index(coords[4], q, r),
        }

    def check(self, instance):
        P, Q, R = instance['P'], instance['Q'], instance['R']
        firsts = self.galois.find_adjoint(instance['f1'], P, Q, ADJOINT_SIDES[0])
        seconds = self.galois.find_adjoint(instance['f2'], Q, R, ADJOINT_SIDES[0])
        for g1, g2 in product(firsts, seconds):
            composed = self.galois.compose_galois(
                GaloisPair(instance['f1'], g1), GaloisPair(instance['f2'], g2))
            verdict = self.galois.is_galois(composed, P, R)
            if not verdict.holds:
                return {'g1': g1, 'g2': g2, 'galois_witness': list(verdict.witness)}
        return None


class AdjointUnique(GaloisClaim):
    claim_id = 'ADJOINT_UNIQUE'
    anchor = "adjoints are unique"
    mapping_types = {'f': ('P', 'Q'), 'h': ('Q', 'P')}

    def strata(self, n_max):
        strata = []
        for p, q in sorted(product(range(1, n_max + 1), repeat=2), key=scale_key):
            size = self.enumeration.pool(p).size
            strata.extend(Stratum((p, q, side), (size,)) for side in ADJOINT_SIDES)
        return strata

    def materialize(self, stratum, coords):
        instance = super(AdjointUnique, self).materialize(stratum, coords)
        if instance is not None:
            instance['side'] = stratum.scale[2]
        return instance

    def given(self, instance):
        # right adjoints are sought for a given f, left adjoints for a given h
        return 'f' if instance['side'] == ADJOINT_SIDES[0] else 'h'

    def sweep(self, tables, given):
        if given == 'f':
            admissible = tables.right_admissible
        else:
            admissible = tables.left_admissible
        counts = admissible.sum(axis=-1)
        return (counts > 0).all(axis=-1) & (counts > 1).any(axis=-1)

    def check_witness(self, instance):
        side = instance['side']
        given = instance['f'] if side == ADJOINT_SIDES[0] else instance['h']
        adjoints = self.galois.find_adjoint(given, instance['P'], instance['Q'], side)
        if len(adjoints) <= 1:
            return None
        return {'adjoints': [list(adjoint.img) for adjoint in adjoints]}

    def load(self, witness):
        instance = super(AdjointUnique, self).load(witness)
        instance['side'] = witness['details']['side']
        return instance


class GaloisAsymmetry(GaloisClaim):
    claim_id = 'GALOIS_ASYMMETRY'
    anchor = "Galois connections are not necessarily symmetric"
    existential = True

    def sweep(self, tables, given):
        return (tables.connected & ~tables.reverse_connected).any(axis=2)

    def check_witness(self, instance):
        P, Q, f = instance['P'], instance['Q'], instance['f']
        for g in self.right_adjoints(instance):
            reverse = self.galois.is_galois(GaloisPair(g, f), Q, P)
            if not reverse.holds:
                return {'g': g, 'reverse_witness': list(reverse.witness)}
        return None
