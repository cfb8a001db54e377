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

import numpy as np

from explorer.constants import AXIOMS, TRANSITIVE_CONCLUSIONS
from explorer.ds import AxiomResult, AxiomVerdict
from explorer.managers import BaseManager

__all__ = ['AxiomsManager']


def _first(mask):
    """Lexicographically least True index of mask, or None"""
    hits = np.argwhere(mask)
    return tuple(int(i) for i in hits[0]) if len(hits) else None


class AxiomsManager(BaseManager):
    """
    Decide the three axioms of a partially ordered binary relation and,
    for comparison, the classical partial order axioms of one relation.

    Every failing axiom reports its lexicographically least witness.
    """

    # the transitivity premise is materialized as an n^5 tensor up to here
    dense_limit = 12

    def check_axioms(self, d):
        """Vectorised check of reflexivity, anti-symmetry and transitivity"""
        r1, r2 = d.r1.bits, d.r2.bits
        return AxiomVerdict(
            reflexive=self._reflexive(r1 & r2),
            antisymmetric=self._antisymmetric(r1, r2),
            transitive=self._transitive_dense(r1, r2) if d.n <= self.dense_limit
            else self._transitive_by_pairs(r1, r2),
        )

    def is_valid(self, d):
        return self.check_axioms(d).passed

    def validate(self, bp):
        """Return bp carrying its axiom certificate"""
        verdict = self.check_axioms(bp.d)
        if not verdict.passed:
            self.app_logger(
                'DEBUG', "structure fails %s" % ', '.join(r.name for r in verdict.failures())
            )
        return bp.with_certificate(verdict)

    @staticmethod
    def _reflexive(diagonal_source):
        witness = _first(~diagonal_source.diagonal())
        return AxiomResult(AXIOMS[0], witness is None, witness)

    @staticmethod
    def _antisymmetric(r1, r2):
        n = r1.shape[0]
        for a in range(n):
            # premise over (b, c): chain(a,b,c), chain(b,a,c), chain(a,c,b)
            premise = (r1[a, :, None] & r2) \
                & (r1[:, a, None] & r2[a, None, :]) \
                & (r1[a, None, :] & r2.T)
            premise[a, a] = False
            hit = _first(premise)
            if hit is not None:
                return AxiomResult(AXIOMS[1], False, (a,) + hit)
        return AxiomResult(AXIOMS[1], True)

    @staticmethod
    def _transitive_result(r1, r2, witness):
        if witness is None:
            return AxiomResult(AXIOMS[2], True)
        a, b, c, d, e = witness
        failed = TRANSITIVE_CONCLUSIONS[0] if not r1[a, d] else TRANSITIVE_CONCLUSIONS[1]
        return AxiomResult(AXIOMS[2], False, witness, failed)

    def _transitive_dense(self, r1, r2):
        # axes (a, b, c, d, e)
        premise = r1[:, :, None, None, None] \
            & r2[None, :, :, None, None] \
            & r1[None, :, None, :, None] \
            & r2.T[None, None, :, :, None] \
            & r2[None, None, :, None, :]
        broken = ~r1[:, None, None, :, None] | ~r2[None, :, None, None, :]
        return self._transitive_result(r1, r2, _first(premise & broken))

    def _transitive_by_pairs(self, r1, r2):
        """(b, c) outer; least (a, d, e) per pair, then the global least tuple"""
        n = r1.shape[0]
        best = None
        for b, c in product(range(n), repeat=2):
            if not r2[b, c]:
                continue
            a_set = np.flatnonzero(r1[:, b])
            d_mask = r1[b] & r2[:, c]
            e_set = np.flatnonzero(r2[c])
            if not len(a_set) or not d_mask.any() or not len(e_set):
                continue
            if best is not None and a_set[0] > best[0]:
                continue
            d_first = int(np.flatnonzero(d_mask)[0])
            bad_e = np.flatnonzero(r2[c] & ~r2[b])
            if len(bad_e):
                a = int(a_set[0])
                e = int(e_set[0]) if not r1[a, d_first] else int(bad_e[0])
                candidate = (a, b, c, d_first, e)
            else:
                misses = d_mask[None, :] & ~r1[a_set]
                rows = np.flatnonzero(misses.any(axis=1))
                if not len(rows):
                    continue
                a = int(a_set[rows[0]])
                candidate = (a, b, c, int(np.flatnonzero(misses[rows[0]])[0]), int(e_set[0]))
            if best is None or candidate < best:
                best = candidate
        return self._transitive_result(r1, r2, best)

    def check_axioms_naive(self, d):
        """Direct quantifiers over python booleans; an independent oracle"""
        n = d.n
        r1, r2 = d.r1.bits.tolist(), d.r2.bits.tolist()

        def chain(a, b, c):
            return r1[a][b] and r2[b][c]

        reflexive = [(a,) for a in range(n) if not chain(a, a, a)]
        antisymmetric = [
            (a, b, c) for a, b, c in product(range(n), repeat=3)
            if chain(a, b, c) and chain(b, a, c) and chain(a, c, b) and not (a == b == c)
        ]
        transitive = [
            (a, b, c, x, e) for a, b, c, x, e in product(range(n), repeat=5)
            if chain(a, b, c) and chain(b, x, c) and r2[c][e]
            and not (chain(a, x, c) and chain(a, b, e))
        ]
        transitive_failed = None
        if transitive:
            a, b, c, x, e = transitive[0]
            transitive_failed = TRANSITIVE_CONCLUSIONS[0] if not chain(a, x, c) else TRANSITIVE_CONCLUSIONS[1]
        return AxiomVerdict(
            reflexive=AxiomResult(AXIOMS[0], not reflexive, reflexive[0] if reflexive else None),
            antisymmetric=AxiomResult(AXIOMS[1], not antisymmetric,
                                      antisymmetric[0] if antisymmetric else None),
            transitive=AxiomResult(AXIOMS[2], not transitive, transitive[0] if transitive else None,
                                   transitive_failed),
        )

    def check_classical_por(self, r):
        """Classical reflexive / anti-symmetric / transitive check of one Rel"""
        bits = r.bits
        n = r.n
        antisymmetric = _first(bits & bits.T & ~np.eye(n, dtype=bool))
        transitive = None
        for a in range(n):
            # (b, c) with a<=b, b<=c and not a<=c
            hit = _first(bits[a, :, None] & bits & ~bits[a, None, :])
            if hit is not None:
                transitive = (a,) + hit
                break
        return AxiomVerdict(
            reflexive=self._reflexive(bits),
            antisymmetric=AxiomResult(AXIOMS[1], antisymmetric is None, antisymmetric),
            transitive=AxiomResult(AXIOMS[2], transitive is None, transitive),
        )
