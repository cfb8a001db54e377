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

import math
from fractions import Fraction
from itertools import product
from operator import le

import numpy as np

from explorer.constants import ADJOINT_SIDES, GALOIS_MODES
from explorer.ds import (
    AdjointReport, BiPoset, Diamond, GaloisPair, GroundSet, Mapping, Rel, Verdict
)
from explorer.exceptions import UsageError
from explorer.managers import BaseManager
from explorer.managers.constructions import ConstructionsManager
from explorer.managers.morphisms import MorphismsManager

__all__ = ['GaloisManager']


class GaloisManager(BaseManager):
    """
    Galois connections between binary posets.

    A pair (f, g) with f: P -> Q and g: Q -> P is a connection when
    f(a) <= b in Q iff a <= g(b) in P, both comparisons taken in the
    diamond order. The antitone shape compares b <= f(a) on the left.
    """

    constructions = ConstructionsManager()
    morphisms = MorphismsManager()

    @staticmethod
    def _check_mode(mode):
        if mode not in GALOIS_MODES:
            raise UsageError("mode must be one of %s, got %s" % (', '.join(GALOIS_MODES), mode))

    @staticmethod
    def _fits(f, src, dst, name='f'):
        if f.src_n != src.n or f.dst_n != dst.n:
            raise UsageError("%s is %i->%i but the structures have %i and %i elements"
                             % (name, f.src_n, f.dst_n, src.n, dst.n))

    @staticmethod
    def _image_side(f, Q, mode):
        """[a, b] = f(a) <= b (b <= f(a) for antitone) in Q"""
        leq = Q.d.leq_matrix
        if mode == GALOIS_MODES[2]:
            return leq[:, f.array].T
        return leq[f.array, :]

    def is_galois(self, pair, P, Q, mode=GALOIS_MODES[0]):
        self._check_mode(mode)
        self._fits(pair.f, P, Q, 'f')
        self._fits(pair.g, Q, P, 'g')
        left = self._image_side(pair.f, Q, mode)
        right = P.d.leq_matrix[:, pair.g.array]
        hits = np.argwhere(left != right)
        if len(hits):
            a, b = (int(i) for i in hits[0])
            return Verdict(False, (a, b), "biconditional fails")
        return Verdict(True)

    def check_adjoint_properties(self, pair, P, Q):
        """Isotony of both maps plus unit in P and counit in Q"""
        self._fits(pair.f, P, Q, 'f')
        self._fits(pair.g, Q, P, 'g')
        f, g = pair.f.array, pair.g.array
        return AdjointReport(
            f_isotone=self.morphisms.is_isotone(pair.f, P.d, Q.d).holds,
            g_isotone=self.morphisms.is_isotone(pair.g, Q.d, P.d).holds,
            unit_holds=bool(P.d.leq_matrix[np.arange(P.n), g[f]].all()),
            counit_holds=bool(Q.d.leq_matrix[f[g], np.arange(Q.n)].all()),
        )

    @staticmethod
    def compose_galois(first, second):
        """(second.f after first.f, first.g after second.g)"""
        if first.f.dst_n != second.f.src_n:
            raise UsageError("pairs do not chain: %i-element middle vs %i-element middle"
                             % (first.f.dst_n, second.f.src_n))
        return GaloisPair(first.f.then(second.f), second.g.then(first.g))

    def find_adjoint(self, f, P, Q, side=ADJOINT_SIDES[0], mode=GALOIS_MODES[0]):
        """
        Every g making (f, g) (right) or (g, f) (left) a connection.

        The biconditional constrains each image point separately, so the
        candidate space is the product of per-point admissible images;
        the result equals scanning all maps and is in lexicographic order.
        """
        self._check_mode(mode)
        if side not in ADJOINT_SIDES:
            raise UsageError("side must be one of %s, got %s" % (', '.join(ADJOINT_SIDES), side))
        p_leq, q_leq = P.d.leq_matrix, Q.d.leq_matrix
        if side == ADJOINT_SIDES[0]:
            self._fits(f, P, Q, 'f')
            left = self._image_side(f, Q, mode)
            # g(b) = y needs column y of P's order to equal column b of left
            admissible = [
                np.flatnonzero((p_leq == left[:, b][:, None]).all(axis=0)).tolist()
                for b in range(Q.n)
            ]
            dst_n = P.n
        else:
            self._fits(f, Q, P, 'f')
            right = p_leq[:, f.array]
            source = q_leq.T if mode == GALOIS_MODES[2] else q_leq
            # g(a) = y needs row y of Q's order to equal row a of right
            admissible = [
                np.flatnonzero((source == right[a][None, :]).all(axis=1)).tolist()
                for a in range(P.n)
            ]
            dst_n = Q.n
        adjoints = [Mapping(img, dst_n) for img in product(*admissible)]
        if len(adjoints) > 1:
            self.app_logger('WARNING', "%i %s adjoints found for %s" % (len(adjoints), side, f.img))
        return adjoints

    # example generators

    def identity_pair(self, n):
        return GaloisPair(Mapping.identity(n), Mapping.identity(n))

    def isomorphism_pair(self, psi):
        """(psi, psi^-1) for a bijection psi"""
        return GaloisPair(psi, psi.inverse())

    def singleton_example(self, full=True):
        """
        P is the powerset of one point, Q a single element; f is constant and
        g picks the full set (a connection) or the empty set (not one).
        """
        P = self.constructions.powerset_biposet(1)
        Q = BiPoset(GroundSet(('q0',)), Diamond(Rel.identity(1), Rel.identity(1)))
        pair = GaloisPair(Mapping.constant(P.n, 1, 0), Mapping((1 if full else 0,), P.n))
        return P, Q, pair

    @staticmethod
    def _fraction_label(value):
        if value.denominator == 1:
            return str(value.numerator)
        return "%i_%i" % (value.numerator, value.denominator)

    def floor_example(self, top=5, denominator=2):
        """
        Integers 0..top embedded into the rationals of [0, top] with
        denominators up to `denominator`; g is the integer part.
        """
        integers = list(range(top + 1))
        rationals = sorted({Fraction(p, q) for q in range(1, denominator + 1) for p in range(top * q + 1)})
        P = BiPoset(GroundSet(tuple(str(x) for x in integers)),
                    Diamond(Rel.from_predicate(integers, le), Rel.from_predicate(integers, le)))
        Q = BiPoset(GroundSet(tuple(self._fraction_label(x) for x in rationals)),
                    Diamond(Rel.from_predicate(rationals, le), Rel.from_predicate(rationals, le)))
        position = {value: i for i, value in enumerate(rationals)}
        f = Mapping(tuple(position[Fraction(x)] for x in integers), Q.n)
        g = Mapping(tuple(math.floor(value) for value in rationals), P.n)
        return P, Q, GaloisPair(f, g)
