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


"""Named structures shared by the test modules."""

import numpy as np

from explorer.ds import BiPoset, Diamond, GroundSet, Mapping, Rel
from explorer.managers.constructions import ConstructionsManager

constructions = ConstructionsManager()

AB = GroundSet(('a', 'b'))

# (identity, identity) on two points
IDENTITY_2 = Diamond(Rel.identity(2), Rel.identity(2))
# both components total
FULL_FULL_2 = Diamond(Rel.full(2), Rel.full(2))
# valid although r1 is not anti-symmetric
FULL_IDENTITY_2 = Diamond(Rel.full(2), Rel.identity(2))
# a before b in r1 only
ARROW_R1_2 = Diamond(Rel.from_pairs(2, [(0, 0), (1, 1), (0, 1)]), Rel.identity(2))

# (<=, divides) on 1 2 3
D2 = constructions.divisibility_biposet(3)
# (<=, divides) on 1 2 3 6; 6 is the diamond top
DIVISORS_6 = constructions.divisors_biposet(6)

# valid, but its dual fails transitivity at (2, 0, 0, 1, 0)
DUAL_BREAKER_CODE = 70
DUAL_BREAKER = Diamond.from_code(3, DUAL_BREAKER_CODE)

# f = g = swap from IDENTITY_2 into ARROW_R1_2 is a connection whose g
# is not isotone
SWAP_2 = Mapping((1, 0), 2)

SINGLE_TEXT = "elements: a\nr1: a a\nr2: a a\n"
UNDECLARED_TEXT = "elements: a b\nr1: a c\n"
D2_TEXT = """# divisibility on 1..3
elements: 1 2 3
r1: 1 1
r1: 1 2
r1: 1 3
r1: 2 2
r1: 2 3
r1: 3 3
r2: 1 1
r2: 1 2
r2: 1 3
r2: 2 2
r2: 3 3
"""


def labeled(d, labels=None):
    """BiPoset over d, default labels a b c d"""
    if labels is None:
        return BiPoset.unlabeled(d)
    return BiPoset(GroundSet(tuple(labels)), d)


def all_diamonds_2():
    """Every diamond on two points, reflexive or not"""
    for code in range(256):
        bits = np.array([(code >> k) & 1 == 1 for k in range(8)])
        yield Diamond.from_bits(bits[:4].reshape(2, 2), bits[4:].reshape(2, 2))
