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

"""
.map text: one '<src> -> <dst>' line per source element. Pair files
prefix each line with 'f:' (P to Q) or 'g:' (Q to P).
"""

from explorer.constants import MAP_ARROW, PAIR_KEYS
from explorer.converters.bpo import content_lines
from explorer.ds import GaloisPair, Mapping
from explorer.exceptions import ParseError

__all__ = ['parse_mapping', 'serialize_mapping', 'parse_pair', 'serialize_pair']


def _parse_arrow(line, number, src, dst, images):
    left, sep, right = line.partition(MAP_ARROW)
    if not sep:
        raise ParseError("expected '<src> %s <dst>'" % MAP_ARROW, number)
    source, target = left.strip(), right.strip()
    if source not in src.labels:
        raise ParseError("undeclared element %s" % source, number)
    if target not in dst.labels:
        raise ParseError("undeclared element %s" % target, number)
    a, b = src.labels.index(source), dst.labels.index(target)
    if images.get(a, b) != b:
        raise ParseError("conflicting images for %s" % source, number)
    images[a] = b


def _total(images, src, dst, name='mapping'):
    missing = [label for i, label in enumerate(src.labels) if i not in images]
    if missing:
        raise ParseError("%s is not total: no image for %s" % (name, ' '.join(missing)))
    return Mapping(tuple(images[i] for i in range(src.n)), dst.n)


def parse_mapping(text, src, dst):
    """Mapping between two ground sets; totality is checked here"""
    images = {}
    for number, line in content_lines(text):
        _parse_arrow(line, number, src, dst, images)
    return _total(images, src, dst)


def serialize_mapping(f, src, dst, prefix=''):
    return ''.join('%s%s %s %s\n' % (prefix, src.labels[a], MAP_ARROW, dst.labels[b])
                   for a, b in enumerate(f.img))


def parse_pair(text, P, Q):
    images = {PAIR_KEYS[0]: {}, PAIR_KEYS[1]: {}}
    for number, line in content_lines(text):
        key, sep, rest = line.partition(':')
        key = key.strip()
        if not sep or key not in images:
            raise ParseError("pair lines start with 'f:' or 'g:'", number)
        if key == PAIR_KEYS[0]:
            _parse_arrow(rest, number, P.ground, Q.ground, images[key])
        else:
            _parse_arrow(rest, number, Q.ground, P.ground, images[key])
    return GaloisPair(_total(images[PAIR_KEYS[0]], P.ground, Q.ground, 'f'),
                      _total(images[PAIR_KEYS[1]], Q.ground, P.ground, 'g'))


def serialize_pair(pair, P, Q):
    return serialize_mapping(pair.f, P.ground, Q.ground, prefix='f: ') + \
        serialize_mapping(pair.g, Q.ground, P.ground, prefix='g: ')
