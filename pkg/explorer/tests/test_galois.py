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


from itertools import product

from django.test import SimpleTestCase

from explorer.constants import ADJOINT_SIDES, GALOIS_MODES
from explorer.ds import GaloisPair, Mapping
from explorer.exceptions import UsageError
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.enumeration import EnumerationManager
from explorer.managers.galois import GaloisManager
from explorer.tests.testdata.structures import (
    ARROW_R1_2, D2, DIVISORS_6, IDENTITY_2, SWAP_2, labeled
)


class GaloisManagerTest(SimpleTestCase):

    galois_manager = GaloisManager()
    constructions_manager = ConstructionsManager()
    enumeration_manager = EnumerationManager()

    def brute_force_adjoints(self, f, P, Q, side, mode):
        if side == ADJOINT_SIDES[0]:
            candidates = (Mapping(img, P.n) for img in product(range(P.n), repeat=Q.n))
            return [g for g in candidates
                    if self.galois_manager.is_galois(GaloisPair(f, g), P, Q, mode).holds]
        candidates = (Mapping(img, Q.n) for img in product(range(Q.n), repeat=P.n))
        return [g for g in candidates
                if self.galois_manager.is_galois(GaloisPair(g, f), P, Q, mode).holds]

    def test_identity_pair(self):
        """Test the identity pair is a connection with every property"""
        pair = self.galois_manager.identity_pair(3)
        self.assertTrue(self.galois_manager.is_galois(pair, D2, D2).holds)
        self.assertTrue(self.galois_manager.check_adjoint_properties(pair, D2, D2).all_hold)

    def test_isomorphism_pair(self):
        """Test (psi, psi inverse) for the power set complement"""
        P = self.constructions_manager.powerset_biposet(2)
        Q = self.constructions_manager.dual_biposet(P)
        pair = self.galois_manager.isomorphism_pair(self.constructions_manager.complement_mapping(2))
        self.assertTrue(self.galois_manager.is_galois(pair, P, Q).holds)

    def test_singleton_example(self):
        """Test the singleton example in both variants"""
        P, Q, pair = self.galois_manager.singleton_example()
        self.assertTrue(self.galois_manager.is_galois(pair, P, Q).holds)
        self.assertTrue(self.galois_manager.check_adjoint_properties(pair, P, Q).all_hold)
        P, Q, pair = self.galois_manager.singleton_example(full=False)
        verdict = self.galois_manager.is_galois(pair, P, Q)
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness, (1, 0))
        self.assertFalse(self.galois_manager.check_adjoint_properties(pair, P, Q).unit_holds)

    def test_floor_example(self):
        """Test inclusion and integer part between 0..5 and the halves"""
        P, Q, pair = self.galois_manager.floor_example()
        self.assertEqual(P.n, 6)
        self.assertEqual(Q.n, 11)
        self.assertIn('5_2', Q.ground.labels)
        self.assertTrue(self.galois_manager.is_galois(pair, P, Q).holds)
        self.assertTrue(self.galois_manager.check_adjoint_properties(pair, P, Q).all_hold)

    def test_is_galois_errors(self):
        """Test is_galois rejects bad input"""
        pair = self.galois_manager.identity_pair(2)
        with self.assertRaises(UsageError):
            self.galois_manager.is_galois(pair, D2, D2)
        with self.assertRaises(UsageError):
            self.galois_manager.is_galois(self.galois_manager.identity_pair(3), D2, D2, mode='sideways')

    def test_antitone(self):
        """Test the swap on a two-element chain is an antitone connection only"""
        P = self.constructions_manager.chain_biposet(2)
        pair = GaloisPair(SWAP_2, SWAP_2)
        self.assertTrue(self.galois_manager.is_galois(pair, P, P, GALOIS_MODES[2]).holds)
        self.assertFalse(self.galois_manager.is_galois(pair, P, P, GALOIS_MODES[0]).holds)

    def test_mode_coherence(self):
        """Test hetero and monotone agree on a structure against itself"""
        structures = [labeled(d) for d in self.enumeration_manager.enumerate_biposets(2)]
        maps = [Mapping(img, 2) for img in product(range(2), repeat=2)]
        for P in structures:
            for f, g in product(maps, repeat=2):
                pair = GaloisPair(f, g)
                self.assertEqual(self.galois_manager.is_galois(pair, P, P, GALOIS_MODES[0]),
                                 self.galois_manager.is_galois(pair, P, P, GALOIS_MODES[1]))

    def test_connection_without_isotone_adjoint(self):
        """Test a connection whose right adjoint is not isotone"""
        P, Q = labeled(IDENTITY_2), labeled(ARROW_R1_2)
        pair = GaloisPair(SWAP_2, SWAP_2)
        self.assertTrue(self.galois_manager.is_galois(pair, P, Q).holds)
        report = self.galois_manager.check_adjoint_properties(pair, P, Q)
        self.assertTrue(report.f_isotone)
        self.assertFalse(report.g_isotone)
        self.assertTrue(report.unit_holds and report.counit_holds)

    def test_asymmetry(self):
        """Test a connection whose swapped pair is not one"""
        P, Q, pair = self.galois_manager.singleton_example()
        self.assertTrue(self.galois_manager.is_galois(pair, P, Q).holds)
        self.assertFalse(self.galois_manager.is_galois(pair.swapped(), Q, P).holds)

    def test_compose_galois(self):
        """Test compose_galois"""
        identity = self.galois_manager.identity_pair(3)
        self.assertEqual(self.galois_manager.compose_galois(identity, identity), identity)
        P, Q, pair = self.galois_manager.singleton_example()
        to_point = GaloisPair(Mapping.constant(4, 1, 0), Mapping((3,), 4))
        self.assertTrue(self.galois_manager.is_galois(to_point, DIVISORS_6, Q).holds)
        composed = self.galois_manager.compose_galois(self.galois_manager.identity_pair(4), to_point)
        self.assertEqual(composed, to_point)
        self.assertTrue(self.galois_manager.is_galois(composed, DIVISORS_6, Q).holds)
        with self.assertRaises(UsageError):
            self.galois_manager.compose_galois(identity, pair)

    def test_find_adjoint(self):
        """Test find_adjoint"""
        self.assertEqual(self.galois_manager.find_adjoint(Mapping.identity(3), D2, D2), [Mapping.identity(3)])
        P, Q, pair = self.galois_manager.singleton_example()
        self.assertEqual(self.galois_manager.find_adjoint(pair.f, P, Q), [Mapping((1,), 2)])
        self.assertEqual(self.galois_manager.find_adjoint(pair.g, P, Q, side=ADJOINT_SIDES[1]), [pair.f])
        self.assertEqual(self.galois_manager.find_adjoint(Mapping((2, 1, 0), 3), D2, D2), [])
        with self.assertRaises(UsageError):
            self.galois_manager.find_adjoint(Mapping.identity(3), D2, D2, side='up')

    def test_find_adjoint_brute_force(self):
        """Test find_adjoint equals scanning every candidate at sizes up to 2"""
        structures = [labeled(d) for n in (1, 2) for d in self.enumeration_manager.enumerate_biposets(n)]
        for P, Q in product(structures, repeat=2):
            for mode in GALOIS_MODES:
                for img in product(range(Q.n), repeat=P.n):
                    f = Mapping(img, Q.n)
                    self.assertEqual(self.galois_manager.find_adjoint(f, P, Q, ADJOINT_SIDES[0], mode),
                                     self.brute_force_adjoints(f, P, Q, ADJOINT_SIDES[0], mode))
                for img in product(range(P.n), repeat=Q.n):
                    f = Mapping(img, P.n)
                    self.assertEqual(self.galois_manager.find_adjoint(f, P, Q, ADJOINT_SIDES[1], mode),
                                     self.brute_force_adjoints(f, P, Q, ADJOINT_SIDES[1], mode))
