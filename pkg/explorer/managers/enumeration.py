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

from functools import cached_property, lru_cache
from itertools import permutations, product

import numpy as np

from explorer.constants import AXIOMS
from explorer.ds import AxiomResult, AxiomVerdict, BiPoset, Diamond, GroundSet, Mapping
from explorer.exceptions import UsageError
from explorer.managers import BaseManager
from explorer.managers.axioms import AxiomsManager

__all__ = ['EnumerationManager', 'StructurePool', 'map_table', 'mapping_from_index']

# certificate attached to structures the enumerator has already checked
PASSING = AxiomVerdict(*(AxiomResult(name, True) for name in AXIOMS))

axioms_manager = AxiomsManager()


def candidate_count(n):
    """Reflexive candidates on n elements: 2^(2n(n-1))"""
    return 1 << (2 * n * (n - 1))


@lru_cache(maxsize=None)
def valid_codes(n):
    """Canonical codes of every valid diamond on n elements, ascending"""
    return tuple(code for code in range(candidate_count(n))
                 if axioms_manager.is_valid(Diamond.from_code(n, code)))


@lru_cache(maxsize=None)
def permutation_table(n):
    return tuple(permutations(range(n)))


def mapping_from_index(index, src_n, dst_n):
    """index-th map range(src_n) -> range(dst_n) in lexicographic image order"""
    img = []
    for _ in range(src_n):
        index, digit = divmod(index, dst_n)
        img.append(digit)
    return Mapping(tuple(reversed(img)), dst_n)


@lru_cache(maxsize=None)
def map_table(src_n, dst_n):
    """Every map range(src_n) -> range(dst_n) as one row, rows in mapping_from_index order"""
    table = np.array(list(product(range(dst_n), repeat=src_n)), dtype=np.intp).reshape(-1, src_n)
    table.flags.writeable = False
    return table


class StructurePool(object):
    """
    Indexable population of structures on n elements. Small scales hold
    only valid diamonds; larger ones hold every reflexive candidate and
    answer None for the invalid ones.
    """

    def __init__(self, n, cached):
        self.n = n
        self.cached = cached
        self.ground = GroundSet.default(n)
        self.size = len(valid_codes(n)) if cached else candidate_count(n)

    def code(self, index):
        return valid_codes(self.n)[index] if self.cached else index

    def get(self, index):
        d = Diamond.from_code(self.n, self.code(index))
        if self.cached:
            return BiPoset(self.ground, d, PASSING)
        verdict = axioms_manager.check_axioms(d)
        return BiPoset(self.ground, d, verdict) if verdict.passed else None

    def _require_cached(self):
        if not self.cached:
            raise UsageError("n=%i is above the cached enumeration scale" % self.n)

    @cached_property
    def diamonds(self):
        self._require_cached()
        return tuple(Diamond.from_code(self.n, code) for code in valid_codes(self.n))

    @cached_property
    def leq_stack(self):
        """leq[i, a, b] of the i-th member"""
        return np.stack([d.leq_matrix for d in self.diamonds])

    @cached_property
    def chain_stack(self):
        """chains[i, a, b, c] of the i-th member"""
        return np.stack([d.chain_tensor for d in self.diamonds])


class EnumerationManager(BaseManager):
    """Canonical enumeration of binary posets on up to four elements"""

    def check_scale(self, n):
        max_n = self.config('BIPOSET_ENUMERATION_MAX_N', 4)
        if not isinstance(n, int) or not 1 <= n <= max_n:
            raise UsageError("n must be between 1 and %i, got %s" % (max_n, n))
        return n

    def enumerate_codes(self, n):
        self.check_scale(n)
        if n <= self.config('BIPOSET_ENUMERATION_CACHE_MAX_N', 3):
            yield from valid_codes(n)
            return
        for code in range(candidate_count(n)):
            if axioms_manager.is_valid(Diamond.from_code(n, code)):
                yield code

    def enumerate_biposets(self, n):
        """Every valid diamond on n elements in ascending code order"""
        for code in self.enumerate_codes(n):
            yield Diamond.from_code(n, code)

    def count(self, n):
        if n <= self.config('BIPOSET_ENUMERATION_CACHE_MAX_N', 3):
            self.check_scale(n)
            return len(valid_codes(n))
        return sum(1 for _ in self.enumerate_codes(n))

    def pool(self, n):
        self.check_scale(n)
        return self._pool(n, n <= self.config('BIPOSET_ENUMERATION_CACHE_MAX_N', 3))

    @staticmethod
    @lru_cache(maxsize=None)
    def _pool(n, cached):
        return StructurePool(n, cached)
