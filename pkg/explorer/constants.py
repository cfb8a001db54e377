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

# IMP: always APPEND tuples with new values
# this defines scope of the application

# Relation components of a diamond
COMPONENTS = (1, 2)
DOT_COMPONENTS = ('1', '2', 'both')

# Sided extremes
DIRECTIONS = ('greatest', 'least')

# Axioms of a partially ordered binary relation
AXIOMS = ('reflexive', 'antisymmetric', 'transitive')
# Which conclusion of the transitivity axiom failed
TRANSITIVE_CONCLUSIONS = ('a1d2c', 'a1b2e')

# Galois connection shapes
GALOIS_MODES = ('hetero', 'monotone', 'antitone')
ADJOINT_SIDES = ('right', 'left')

# Claim registry identifiers
CLAIM_IDS = (
    'INTERSECT_CLOSURE', 'UNIQUE_GMAX', 'UNIQUE_GMIN', 'UNIQUE_LMAX',
    'UNIQUE_LMIN', 'POWERSET_VALID', 'ISO_IFF_ISOTONE', 'DUALITY_PRINCIPLE',
    'POWERSET_SELF_DUAL', 'DOUBLE_DUAL', 'GALOIS_THM11_FWD', 'GALOIS_THM11_BWD',
    'GALOIS_COMPOSE', 'ADJOINT_UNIQUE', 'GALOIS_ASYMMETRY',
)

# Finding verdicts and modes
VERDICTS = ('verified-at-scale', 'counterexample')
ORACLE_MODES = ('exhaustive', 'sampled')

# Element labels used by the enumerator (n <= 4)
ENUMERATION_LABELS = ('a', 'b', 'c', 'd')

# Text formats
BPO_ELEMENTS_KEY = 'elements'
BPO_RELATION_KEYS = ('r1', 'r2')
BPO_NAME_PATTERN = r'^[A-Za-z0-9_{}]+$'
MAP_ARROW = '->'
PAIR_KEYS = ('f', 'g')

# CLI exit codes
EXIT_FAILS = 1
EXIT_USAGE = 2
