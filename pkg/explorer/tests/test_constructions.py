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


import numpy as np
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings, strategies as st

from explorer.ds import Diamond, Rel
from explorer.exceptions import ResourceError, UsageError
from explorer.managers.axioms import AxiomsManager
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.enumeration import valid_codes
from explorer.managers.morphisms import MorphismsManager
from explorer.tests.testdata.structures import D2, FULL_FULL_2, IDENTITY_2


class ConstructionsManagerTest(SimpleTestCase):

    constructions_manager = ConstructionsManager()
    axioms_manager = AxiomsManager()
    morphisms_manager = MorphismsManager()

    def test_intersect_many(self):
        """Test intersect_many"""
        self.assertEqual(self.constructions_manager.intersect_many([D2.d]), D2.d)
        self.assertEqual(self.constructions_manager.intersect_many([IDENTITY_2, FULL_FULL_2]), IDENTITY_2)
        flipped = Diamond(D2.d.r2, D2.d.r1)
        both = self.constructions_manager.intersect_many([D2.d, flipped])
        expected = [(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]
        self.assertEqual(both.r1.pairs(), expected)
        self.assertEqual(both.r2.pairs(), expected)

    def test_intersect_many_errors(self):
        """Test intersect_many rejects bad input"""
        with self.assertRaises(UsageError):
            self.constructions_manager.intersect_many([])
        with self.assertRaises(UsageError):
            self.constructions_manager.intersect_many([IDENTITY_2, D2.d])

    def test_intersection_closure_n2(self):
        """Test every pair of valid structures at n=2 intersects to a valid one"""
        ds = [Diamond.from_code(2, code) for code in valid_codes(2)]
        for first in ds:
            for second in ds:
                meet = self.constructions_manager.intersect_many([first, second])
                self.assertTrue(self.axioms_manager.is_valid(meet), (first.code, second.code))

    @given(st.lists(st.sampled_from(valid_codes(3)), min_size=2, max_size=4))
    @settings(max_examples=300, deadline=None)
    def test_intersection_closure_n3(self, codes):
        """Test intersections of valid structures at n=3"""
        meet = self.constructions_manager.intersect_many([Diamond.from_code(3, code) for code in codes])
        self.assertTrue(self.axioms_manager.is_valid(meet), codes)

    def test_dual(self):
        """Test dual"""
        self.assertEqual(self.constructions_manager.dual(IDENTITY_2), IDENTITY_2)
        dual = self.constructions_manager.dual(D2.d)
        self.assertTrue(dual.r1.contains(2, 0), "3 >= 1")
        self.assertTrue(dual.r2.contains(1, 0), "2 is divisible by 1")
        self.assertFalse(dual.r2.contains(2, 1))
        bp = self.constructions_manager.dual_biposet(D2)
        self.assertEqual(bp.ground, D2.ground)
        self.assertIsNone(bp.certificate)

    @given(st.integers(min_value=0, max_value=4095))
    @settings(deadline=None)
    def test_dual_involution(self, code):
        """Test dual twice is the identity at n=3"""
        d = Diamond.from_code(3, code)
        dual = self.constructions_manager.dual(d)
        self.assertEqual(self.constructions_manager.dual(dual), d)
        self.assertTrue(np.array_equal(self.constructions_manager.dual_chain_tensor(d), dual.chain_tensor))

    def test_dual_involution_n6(self):
        """Test dual twice is the identity on random diamonds at n=6"""
        rng = np.random.default_rng(6)
        for _ in range(1000):
            d = Diamond.from_bits(rng.random((6, 6)) < 0.5, rng.random((6, 6)) < 0.5)
            self.assertEqual(self.constructions_manager.dual(self.constructions_manager.dual(d)), d)

    def test_powerset_biposet(self):
        """Test powerset_biposet"""
        empty = self.constructions_manager.powerset_biposet(0)
        self.assertEqual(empty.ground.labels, ('s0',))
        self.assertEqual(empty.d.r1.pairs(), [(0, 0)])
        one = self.constructions_manager.powerset_biposet(1)
        self.assertEqual(one.d.r1.pairs(), [(0, 0), (0, 1), (1, 1)])
        self.assertEqual(one.d.r1, one.d.r2)
        for k in range(4):
            bp = self.constructions_manager.powerset_biposet(k)
            self.assertEqual(bp.n, 1 << k)
            self.assertTrue(self.axioms_manager.is_valid(bp.d), k)

    @override_settings(BIPOSET_POWERSET_MAX_K=2)
    def test_powerset_cap(self):
        """Test powerset_biposet resource cap"""
        self.assertEqual(self.constructions_manager.powerset_biposet(2).n, 4)
        with self.assertRaises(ResourceError):
            self.constructions_manager.powerset_biposet(3)
        with self.assertRaises(UsageError):
            self.constructions_manager.powerset_biposet(-1)

    def test_complement_is_self_duality(self):
        """Test the complement mapping is an isomorphism onto the dual"""
        for k in range(4):
            bp = self.constructions_manager.powerset_biposet(k)
            psi = self.constructions_manager.complement_mapping(k)
            dual = self.constructions_manager.dual_biposet(bp)
            self.assertTrue(self.morphisms_manager.is_isomorphism(psi, bp, dual).holds, k)

    def test_arithmetic_biposets(self):
        """Test divisibility, divisors and chain structures"""
        one = self.constructions_manager.divisibility_biposet(1)
        self.assertEqual(one.d, Diamond(Rel.identity(1), Rel.identity(1)))
        for k in (3, 12):
            bp = self.constructions_manager.divisibility_biposet(k)
            self.assertTrue(self.axioms_manager.is_valid(bp.d), k)
        divisors = self.constructions_manager.divisors_biposet(6)
        self.assertEqual(divisors.ground.labels, ('1', '2', '3', '6'))
        self.assertTrue(self.axioms_manager.is_valid(divisors.d))
        chain = self.constructions_manager.chain_biposet(3)
        self.assertEqual(chain.d.r1, chain.d.r2)
        self.assertTrue(self.axioms_manager.check_classical_por(chain.d.r1).passed)
        with self.assertRaises(UsageError):
            self.constructions_manager.divisibility_biposet(0)
