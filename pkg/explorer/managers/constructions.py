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

from functools import reduce

import numpy as np

from explorer.ds import BiPoset, Diamond, GroundSet, Mapping, Rel
from explorer.exceptions import ResourceError, UsageError
from explorer.managers import BaseManager

__all__ = ['ConstructionsManager']


def _le(x, y):
    return x <= y


def _divides(x, y):
    return y % x == 0


class ConstructionsManager(BaseManager):
    """Intersections, duals and the arithmetic / powerset generators"""

    def intersect_many(self, ds):
        """Component-wise intersection of a non-empty list of diamonds"""
        ds = list(ds)
        if not ds:
            raise UsageError("intersect_many needs at least one diamond")
        sizes = {d.n for d in ds}
        if len(sizes) > 1:
            raise UsageError("dimension mismatch: %s" % sorted(sizes))
        return Diamond(
            reduce(lambda acc, rel: acc & rel, (d.r1 for d in ds)),
            reduce(lambda acc, rel: acc & rel, (d.r2 for d in ds)),
        )

    @staticmethod
    def dual(d):
        return Diamond(d.r1.transpose(), d.r2.transpose())

    def dual_biposet(self, bp):
        return BiPoset(bp.ground, self.dual(bp.d))

    @staticmethod
    def dual_chain_tensor(d):
        """
        Chains of the dual read the other way round: the dual chain a, b, c
        holds iff c r2 b and b r1 a. Must agree with dual(d).chain_tensor.
        """
        reversed_chains = d.r2.bits[:, :, None] & d.r1.bits[None, :, :]  # [c, b, a]
        return np.transpose(reversed_chains, (2, 1, 0))

    def powerset_biposet(self, k):
        """(subset, subset) on all 2^k subsets, labels s<bitmask> in bitmask order"""
        cap = self.config('BIPOSET_POWERSET_MAX_K', 12)
        if k < 0:
            raise UsageError("k must be a natural number, got %i" % k)
        if k > cap:
            raise ResourceError("powerset of %i points exceeds the cap of %i" % (k, cap))
        masks = np.arange(1 << k)
        inclusion = (masks[:, None] & ~masks[None, :]) == 0
        ground = GroundSet(tuple('s%i' % mask for mask in masks.tolist()))
        return BiPoset(ground, Diamond.from_bits(inclusion, inclusion))

    @staticmethod
    def complement_mapping(k):
        """A -> X - A on the powerset of k points"""
        full = (1 << k) - 1
        return Mapping(tuple(full ^ mask for mask in range(1 << k)), 1 << k)

    def divisibility_biposet(self, k):
        """(<=, divides) on {1..k}"""
        if k < 1:
            raise UsageError("divisibility_biposet needs k >= 1, got %i" % k)
        return self.arithmetic_biposet(list(range(1, k + 1)))

    def divisors_biposet(self, m):
        """(<=, divides) on the divisors of m"""
        if m < 1:
            raise UsageError("divisors_biposet needs m >= 1, got %i" % m)
        return self.arithmetic_biposet([x for x in range(1, m + 1) if m % x == 0])

    @staticmethod
    def arithmetic_biposet(values, first=_le, second=_divides):
        ground = GroundSet(tuple(str(x) for x in values))
        return BiPoset(ground, Diamond(Rel.from_predicate(values, first),
                                       Rel.from_predicate(values, second)))

    @staticmethod
    def chain_biposet(k):
        """(<=, <=) on k elements"""
        if k < 1:
            raise UsageError("chain_biposet needs k >= 1, got %i" % k)
        order = np.triu(np.ones((k, k), dtype=bool))
        return BiPoset(GroundSet.default(k), Diamond.from_bits(order, order))
