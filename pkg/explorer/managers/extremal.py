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

from collections import OrderedDict
from itertools import product

import numpy as np

from explorer.constants import COMPONENTS, DIRECTIONS
from explorer.ds import ExtremalReport
from explorer.exceptions import UsageError
from explorer.managers import BaseManager

__all__ = ['ExtremalManager']


class ExtremalManager(BaseManager):
    """
    Sided greatest / least elements and the maximal / minimal
    greatest and least elements built from them.

    x, y are the greatest elements of r1, r2; u, v the least ones.
    g_max, g_min are sup / inf of {x, y}; l_max, l_min of {u, v}.
    Comparison is the diamond order (both components at once).
    """

    @staticmethod
    def _require_validated(bp):
        if not bp.is_validated:
            raise UsageError("structure has not been validated as a binary poset")

    def sided_extreme(self, bp, component, direction):
        """
        Every element qualifying as greatest (or least) for one component,
        ascending. Empty means absent; more than one is an anomaly.
        """
        self._require_validated(bp)
        if component not in COMPONENTS:
            raise UsageError("component must be 1 or 2, got %s" % component)
        if direction not in DIRECTIONS:
            raise UsageError("direction must be one of %s" % ', '.join(DIRECTIONS))
        bits = (bp.d.r1 if component == 1 else bp.d.r2).bits
        # greatest g: a r g for every a, i.e. a full column
        axis = 0 if direction == DIRECTIONS[0] else 1
        return tuple(int(i) for i in np.flatnonzero(bits.all(axis=axis)))

    @staticmethod
    def sup(d, x, y):
        if x == y:
            return x
        if d.leq(x, y):
            return y
        if d.leq(y, x):
            return x
        return None

    @staticmethod
    def inf(d, x, y):
        if x == y:
            return x
        if d.leq(x, y):
            return x
        if d.leq(y, x):
            return y
        return None

    def _candidates(self, bound, d, xs, ys):
        values = {bound(d, x, y) for x, y in product(xs, ys)}
        values.discard(None)
        return tuple(sorted(values))

    def extreme_values(self, bp):
        """Every value the sup/inf rule yields, over all sided qualifiers"""
        sided = self._sided(bp)
        d = bp.d
        return OrderedDict([
            ('g_max', self._candidates(self.sup, d, sided['x'], sided['y'])),
            ('g_min', self._candidates(self.inf, d, sided['x'], sided['y'])),
            ('l_max', self._candidates(self.sup, d, sided['u'], sided['v'])),
            ('l_min', self._candidates(self.inf, d, sided['u'], sided['v'])),
        ])

    def _sided(self, bp):
        return OrderedDict([
            ('x', self.sided_extreme(bp, 1, DIRECTIONS[0])),
            ('y', self.sided_extreme(bp, 2, DIRECTIONS[0])),
            ('u', self.sided_extreme(bp, 1, DIRECTIONS[1])),
            ('v', self.sided_extreme(bp, 2, DIRECTIONS[1])),
        ])

    def _bound(self, name, bound, d, first, second, notes):
        left, right = first
        left_name, right_name = second
        if not left or not right:
            missing = [label for label, found in ((left_name, left), (right_name, right)) if not found]
            notes.append("%s absent: %s does not exist" % (name, ' and '.join(missing)))
            return None
        values = self._candidates(bound, d, left, right)
        if not values:
            notes.append("%s absent: %s and %s are incomparable" % (name, left_name, right_name))
            return None
        if len(values) > 1:
            notes.append("%s ambiguous: %s" % (name, ', '.join(str(v) for v in values)))
            return None
        return values[0]

    def extremal_report(self, bp):
        self._require_validated(bp)
        sided = self._sided(bp)
        notes, anomalies = [], []
        for name, qualifiers in sided.items():
            if len(qualifiers) > 1:
                anomalies.append("%s has %i qualifiers: %s" % (
                    name, len(qualifiers), ' '.join(bp.ground.labels[i] for i in qualifiers)))

        def single(name):
            return sided[name][0] if len(sided[name]) == 1 else None

        d = bp.d
        greatest = (sided['x'], sided['y']), ('x', 'y')
        least = (sided['u'], sided['v']), ('u', 'v')
        g_max = self._bound('g_max', self.sup, d, *greatest, notes)
        g_min = self._bound('g_min', self.inf, d, *greatest, notes)
        l_max = self._bound('l_max', self.sup, d, *least, notes)
        l_min = self._bound('l_min', self.inf, d, *least, notes)
        if anomalies:
            self.app_logger('WARNING', "sided extreme anomaly: %s" % '; '.join(anomalies))
        return ExtremalReport(
            x=single('x'), y=single('y'), g_max=g_max, g_min=g_min,
            u=single('u'), v=single('v'), l_max=l_max, l_min=l_min,
            bounded=g_max is not None and l_min is not None,
            notes=tuple(notes), anomalies=tuple(anomalies),
        )
