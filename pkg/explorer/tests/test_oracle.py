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


from django.test import SimpleTestCase, override_settings
from mock import patch

from biposets.celery import app as celery_app
from explorer.claims.mapper import ClaimMapper
from explorer.constants import CLAIM_IDS, ORACLE_MODES, VERDICTS
from explorer.converters.bpo import parse_structure
from explorer.converters.findings import dump_finding, load_finding
from explorer.exceptions import UsageError
from explorer.managers.axioms import AxiomsManager
from explorer.managers.enumeration import EnumerationManager, map_table, mapping_from_index
from explorer.managers.oracle import OracleManager
from explorer.tests.testdata.structures import DUAL_BREAKER_CODE, all_diamonds_2


class EnumerationManagerTest(SimpleTestCase):

    enumeration_manager = EnumerationManager()
    axioms_manager = AxiomsManager()

    def test_counts(self):
        """Test golden structure counts"""
        self.assertEqual(self.enumeration_manager.count(1), 1)
        self.assertEqual(self.enumeration_manager.count(2), 11)
        self.assertEqual(self.enumeration_manager.count(3), 653)

    def test_enumerate_n2(self):
        """Test enumerate_biposets at n=2"""
        codes = list(self.enumeration_manager.enumerate_codes(2))
        self.assertEqual(codes, sorted(codes))
        self.assertIn(0, codes, "(identity, identity)")
        self.assertIn(3, codes, "(full, identity)")
        self.assertNotIn(15, codes, "(full, full)")

    def test_naive_cross_check(self):
        """Test the enumerator agrees with the naive checker for n <= 2"""
        naive = {d for d in all_diamonds_2() if self.axioms_manager.check_axioms_naive(d).passed}
        self.assertEqual(naive, set(self.enumeration_manager.enumerate_biposets(2)))
        self.assertEqual(len(list(self.enumeration_manager.enumerate_biposets(1))), 1)

    def test_check_scale(self):
        """Test scale bounds"""
        for n in (0, 5):
            with self.assertRaises(UsageError):
                list(self.enumeration_manager.enumerate_codes(n))

    @override_settings(BIPOSET_ENUMERATION_CACHE_MAX_N=1)
    def test_uncached_pool(self):
        """Test the uncached pool filters raw candidates"""
        pool = self.enumeration_manager.pool(2)
        self.assertEqual(pool.size, 16)
        self.assertIsNone(pool.get(15))
        self.assertTrue(pool.get(3).is_validated)
        self.assertEqual(self.enumeration_manager.count(2), 11)
        with self.assertRaises(UsageError):
            pool.leq_stack

    def test_mapping_from_index(self):
        """Test maps are indexed in lexicographic image order"""
        self.assertEqual(mapping_from_index(0, 2, 3).img, (0, 0))
        self.assertEqual(mapping_from_index(5, 2, 3).img, (1, 2))
        self.assertEqual(mapping_from_index(8, 2, 3).img, (2, 2))

    def test_map_table(self):
        """Test the map table rows follow mapping_from_index"""
        table = map_table(2, 3)
        self.assertEqual(table.shape, (9, 2))
        for index in range(9):
            self.assertEqual(tuple(table[index]), mapping_from_index(index, 2, 3).img)
        self.assertEqual(map_table(3, 1).tolist(), [[0, 0, 0]])

    def test_pool_stacks(self):
        """Test stacked orders line up with pool indices"""
        pool = self.enumeration_manager.pool(2)
        self.assertEqual(pool.leq_stack.shape, (11, 2, 2))
        self.assertEqual(pool.chain_stack.shape, (11, 2, 2, 2))
        for index in (0, 3, 10):
            d = pool.get(index).d
            self.assertTrue((pool.leq_stack[index] == d.leq_matrix).all())
            self.assertTrue((pool.chain_stack[index] == d.chain_tensor).all())


class OracleManagerTest(SimpleTestCase):

    oracle_manager = OracleManager()

    def test_trivial_claims(self):
        """Test claims that hold by construction"""
        finding = self.oracle_manager.verify_claim('DOUBLE_DUAL', 3)
        self.assertEqual(finding.verdict, VERDICTS[0])
        self.assertEqual(finding.instances_checked, 665)
        self.assertEqual(finding.mode, ORACLE_MODES[0])
        self.assertIsNone(finding.seed)
        finding = self.oracle_manager.verify_claim('POWERSET_VALID', 3)
        self.assertTrue(finding.verified)
        self.assertEqual(finding.instances_checked, 4)
        self.assertTrue(self.oracle_manager.verify_claim('powerset-self-dual', 3).verified)

    def test_structure_claims(self):
        """Test uniqueness and closure claims at small scale"""
        for claim in ('UNIQUE_GMAX', 'UNIQUE_GMIN', 'UNIQUE_LMAX', 'UNIQUE_LMIN'):
            finding = self.oracle_manager.verify_claim(claim, 3)
            self.assertTrue(finding.verified, claim)
            self.assertEqual(finding.scale, {'n_max': 3})
        finding = self.oracle_manager.verify_claim('INTERSECT_CLOSURE', 2)
        self.assertTrue(finding.verified)
        self.assertEqual(finding.instances_checked, 1 + 1 + 11 ** 2 + 11 ** 3)
        self.assertTrue(self.oracle_manager.verify_claim('ISO_IFF_ISOTONE', 2).verified)

    def test_duality_principle(self):
        """Test the duality principle holds at n=2 and fails at n=3"""
        self.assertTrue(self.oracle_manager.verify_claim('DUALITY_PRINCIPLE', 2).verified)
        finding = self.oracle_manager.verify_claim('DUALITY_PRINCIPLE', 3)
        self.assertEqual(finding.verdict, VERDICTS[1])
        self.assertEqual(finding.scale, {'n_max': 3, 'witness': [3]})
        P = parse_structure(finding.witness['structures']['P'])
        self.assertEqual(P.d.code, DUAL_BREAKER_CODE)
        self.assertEqual(finding.witness['details']['transitive'], ['c', 'a', 'a', 'b', 'a'])
        self.assertTrue(self.oracle_manager.replay_finding(finding))

    def test_galois_forward(self):
        """Test a connection without the four properties turns up at sizes 2 and 2"""
        finding = self.oracle_manager.verify_claim('GALOIS_THM11_FWD', 2)
        self.assertEqual(finding.verdict, VERDICTS[1])
        self.assertEqual(finding.scale['witness'], [2, 2])
        witness = finding.witness
        self.assertEqual(parse_structure(witness['structures']['P']).d.code, 0)
        self.assertEqual(parse_structure(witness['structures']['Q']).d.code, 1)
        # the identity pair, whose g loses the chain a, b, b
        self.assertEqual(witness['mappings']['f'], "a -> a\nb -> b\n")
        self.assertEqual(witness['mappings']['g'], "a -> a\nb -> b\n")
        self.assertFalse(witness['details']['g_isotone'])
        self.assertTrue(self.oracle_manager.replay_finding(finding))
        self.assertTrue(self.oracle_manager.verify_claim('GALOIS_THM11_FWD', 1).verified)

    def test_galois_claims(self):
        """Test the remaining connection claims at sizes up to 2"""
        for claim in ('GALOIS_THM11_BWD', 'GALOIS_COMPOSE', 'ADJOINT_UNIQUE'):
            self.assertTrue(self.oracle_manager.verify_claim(claim, 2).verified, claim)
        finding = self.oracle_manager.verify_claim('GALOIS_ASYMMETRY', 2)
        self.assertTrue(finding.existential)
        self.assertTrue(finding.verified)
        self.assertIsNotNone(finding.witness)
        self.assertTrue(self.oracle_manager.replay_finding(finding))
        self.assertFalse(self.oracle_manager.verify_claim('GALOIS_ASYMMETRY', 1).verified)

    @override_settings(BIPOSET_GALOIS_MAX_SCALE=1)
    def test_galois_clamp(self):
        """Test connection claims clamp their scale"""
        finding = self.oracle_manager.verify_claim('GALOIS_THM11_FWD', 3)
        self.assertEqual(finding.scale, {'n_max': 1})
        self.assertTrue(finding.verified)

    @override_settings(BIPOSET_ENUMERATION_CACHE_MAX_N=2)
    def test_sweep_clamp(self):
        """Test map sweeping claims stay within the cached pools"""
        finding = self.oracle_manager.verify_claim('ISO_IFF_ISOTONE', 3)
        self.assertEqual(finding.scale, {'n_max': 2})
        self.assertEqual(finding.instances_checked, 1 + 11)
        self.assertEqual(self.oracle_manager.verify_claim('GALOIS_THM11_BWD', 3).scale['n_max'], 2)

    def test_mapping_claims_at_three(self):
        """Test the map sweeping claims run exhaustively up to n=3"""
        pools = 1 + 11 + 653
        finding = self.oracle_manager.verify_claim('ISO_IFF_ISOTONE', 3)
        self.assertEqual(finding.mode, ORACLE_MODES[0])
        self.assertTrue(finding.verified)
        self.assertEqual(finding.instances_checked, pools)
        # leq is antisymmetric, so each image point admits at most one adjoint value
        finding = self.oracle_manager.verify_claim('ADJOINT_UNIQUE', 3)
        self.assertEqual(finding.mode, ORACLE_MODES[0])
        self.assertTrue(finding.verified)
        self.assertEqual(finding.instances_checked, 6 * pools)
        finding = self.oracle_manager.verify_claim('GALOIS_THM11_BWD', 3)
        self.assertEqual(finding.mode, ORACLE_MODES[0])
        self.assertEqual(finding.space, 3 * pools)
        if finding.verified:
            self.assertEqual(finding.instances_checked, 3 * pools)
        else:
            self.assertTrue(self.oracle_manager.replay_finding(finding))

    def test_sampled_determinism(self):
        """Test a sampled run is reproducible and records its seed"""
        first = self.oracle_manager.verify_claim('INTERSECT_CLOSURE', 3, budget=500, seed=7)
        second = self.oracle_manager.verify_claim('INTERSECT_CLOSURE', 3, budget=500, seed=7)
        self.assertEqual(first, second)
        self.assertEqual(first.mode, ORACLE_MODES[1])
        self.assertEqual(first.seed, 7)
        self.assertEqual(first.budget, 500)
        self.assertTrue(first.verified)
        self.assertLessEqual(first.instances_checked, 500)

    def test_intersection_closure_at_three(self):
        """Test intersection closure over a large sample of pairs and triples on three elements"""
        finding = self.oracle_manager.verify_claim('INTERSECT_CLOSURE', 3, budget=10000, seed=11)
        self.assertEqual(finding.mode, ORACLE_MODES[1])
        self.assertEqual(finding.space, 1 + 1 + 11 ** 2 + 11 ** 3 + 653 ** 2 + 653 ** 3)
        self.assertTrue(finding.verified)
        self.assertGreaterEqual(finding.instances_checked, 9900)

    @patch.object(celery_app.conf, 'task_always_eager', True)
    def test_workers_do_not_change_findings(self):
        """Test findings are identical for one and three workers"""
        for claim, n in (('DUALITY_PRINCIPLE', 3), ('DOUBLE_DUAL', 2), ('GALOIS_THM11_FWD', 2)):
            self.assertEqual(self.oracle_manager.verify_claim(claim, n, workers=1),
                             self.oracle_manager.verify_claim(claim, n, workers=3), claim)

    def test_partition(self):
        """Test partition covers the range with contiguous chunks"""
        self.assertEqual(self.oracle_manager.partition(10, 3), [(0, 3), (3, 7), (7, 10)])
        self.assertEqual(self.oracle_manager.partition(2, 5), [(0, 1), (1, 2)])
        self.assertEqual(self.oracle_manager.partition(0, 4), [(0, 0)])

    def test_report_replay(self):
        """Test a counterexample survives the YAML report"""
        finding = self.oracle_manager.verify_claim('DUALITY_PRINCIPLE', 3)
        text = dump_finding(finding)
        self.assertIn('verdict: counterexample', text)
        loaded = load_finding(text)
        self.assertEqual(loaded, finding)
        self.assertTrue(self.oracle_manager.replay_finding(loaded))

    def test_claim_registry(self):
        """Test the registry lists CLAIM_IDS and refuses to drift from it"""
        mapper = ClaimMapper()
        self.assertEqual(mapper.claim_ids(), list(CLAIM_IDS))
        self.assertEqual(mapper.get('galois-thm11-fwd').claim_id, 'GALOIS_THM11_FWD')
        with patch.dict(ClaimMapper.CLAIMS):
            del ClaimMapper.CLAIMS['DOUBLE_DUAL']
            with self.assertRaises(UsageError):
                mapper.claim_ids()

    def test_errors(self):
        """Test verify_claim and replay_finding reject bad input"""
        with self.assertRaises(UsageError):
            self.oracle_manager.verify_claim('NO_SUCH_CLAIM', 2)
        with self.assertRaises(UsageError):
            self.oracle_manager.verify_claim('DOUBLE_DUAL', 5)
        with self.assertRaises(UsageError):
            self.oracle_manager.verify_claim('DOUBLE_DUAL', 2, budget=0)
        with self.assertRaises(UsageError):
            self.oracle_manager.replay_finding(self.oracle_manager.verify_claim('DOUBLE_DUAL', 1))
