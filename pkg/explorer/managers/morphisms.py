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

from collections import Counter

import numpy as np

from explorer.ds import Mapping, Verdict
from explorer.exceptions import UsageError
from explorer.managers import BaseManager
from explorer.managers.constructions import ConstructionsManager

__all__ = ['MorphismsManager']


def _first(mask):
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


class MorphismsManager(BaseManager):
    """Isotone maps, isomorphisms and the self-duality search"""

    constructions = ConstructionsManager()

    @staticmethod
    def _image_chains(f, dst):
        img = f.array
        return dst.chain_tensor[np.ix_(img, img, img)]

    def is_isotone(self, f, src, dst):
        """Forward chain preservation between two diamonds"""
        if f.src_n != src.n or f.dst_n != dst.n:
            raise UsageError("mapping %i->%i does not fit diamonds of size %i and %i"
                             % (f.src_n, f.dst_n, src.n, dst.n))
        witness = _first(src.chain_tensor & ~self._image_chains(f, dst))
        return Verdict(witness is None, witness, None if witness is None else "image chain fails")

    def is_isomorphism(self, f, src, dst):
        """Bijection with the chain biconditional on every triple"""
        if f.src_n != src.n or f.dst_n != dst.n:
            raise UsageError("mapping %i->%i does not fit structures of size %i and %i"
                             % (f.src_n, f.dst_n, src.n, dst.n))
        if not f.is_bijective():
            return Verdict(False, None, "not a bijection")
        witness = _first(src.d.chain_tensor != self._image_chains(f, dst.d))
        return Verdict(witness is None, witness, None if witness is None else "chain biconditional fails")

    @staticmethod
    def _signatures(d):
        chains = d.chain_tensor
        by_position = np.stack([
            chains.sum(axis=(1, 2)), chains.sum(axis=(0, 2)), chains.sum(axis=(0, 1))
        ], axis=1)
        if d.r1.is_reflexive() and d.r2.is_reflexive():
            # reflexive components are recoverable from chains, so degrees are invariant too
            r1, r2 = d.r1.bits, d.r2.bits
            degrees = np.stack([r1.sum(axis=1), r1.sum(axis=0), r2.sum(axis=1), r2.sum(axis=0)], axis=1)
            by_position = np.concatenate([by_position, degrees], axis=1)
        return [tuple(int(v) for v in row) for row in by_position]

    def find_isomorphism(self, src, dst):
        """Lexicographically least isomorphism in image order, or None"""
        n = src.n
        if n != dst.n:
            return None
        src_chains, dst_chains = src.d.chain_tensor, dst.d.chain_tensor
        if src_chains.sum() != dst_chains.sum():
            return None
        src_sig, dst_sig = self._signatures(src.d), self._signatures(dst.d)
        if Counter(src_sig) != Counter(dst_sig):
            return None

        candidates = [[v for v in range(n) if dst_sig[v] == src_sig[u]] for u in range(n)]
        img, used = [], [False] * n

        def consistent():
            k = len(img)
            placed = np.arange(k)
            return np.array_equal(src_chains[np.ix_(placed, placed, placed)],
                                  dst_chains[np.ix_(img, img, img)])

        def backtrack(u):
            if u == n:
                return True
            for v in candidates[u]:
                if used[v]:
                    continue
                img.append(v)
                used[v] = True
                if consistent() and backtrack(u + 1):
                    return True
                img.pop()
                used[v] = False
            return False

        if backtrack(0):
            return Mapping(tuple(img), n)
        return None

    def self_dual_witness(self, bp):
        return self.find_isomorphism(bp, self.constructions.dual_biposet(bp))
