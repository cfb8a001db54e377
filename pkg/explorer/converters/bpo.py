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

"""Line-oriented .bpo text format for binary posets."""

import re

import numpy as np

from explorer.constants import BPO_ELEMENTS_KEY, BPO_NAME_PATTERN, BPO_RELATION_KEYS
from explorer.ds import BiPoset, Diamond, GroundSet
from explorer.exceptions import ParseError

__all__ = ['parse_structure', 'serialize_structure', 'content_lines']

NAME_RE = re.compile(BPO_NAME_PATTERN)


def content_lines(text):
    """(line number, stripped line) for every non-blank, non-comment line"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith('#'):
            yield number, line


def _split_key(line, number):
    key, sep, rest = line.partition(':')
    if not sep:
        raise ParseError("expected '<key>: ...'", number)
    return key.strip(), rest.split()


def parse_structure(text):
    """
    Parse .bpo text into an unvalidated BiPoset, elements in
    declaration order. Repeated pairs are accepted once.
    """
    lines = content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing '%s:' line" % BPO_ELEMENTS_KEY)
    number, line = header
    key, names = _split_key(line, number)
    if key != BPO_ELEMENTS_KEY:
        raise ParseError("first line must declare '%s:'" % BPO_ELEMENTS_KEY, number)
    if not names:
        raise ParseError("no elements declared", number)
    index = {}
    for name in names:
        if not NAME_RE.match(name):
            raise ParseError("invalid element name %s" % name, number)
        if name in index:
            raise ParseError("duplicate element %s" % name, number)
        index[name] = len(index)

    n = len(index)
    bits = {key: np.zeros((n, n), dtype=bool) for key in BPO_RELATION_KEYS}
    for number, line in lines:
        key, pair = _split_key(line, number)
        if key not in bits:
            raise ParseError("unknown key %s" % key, number)
        if len(pair) != 2:
            raise ParseError("expected exactly two element names", number)
        for name in pair:
            if name not in index:
                raise ParseError("undeclared element %s" % name, number)
        bits[key][index[pair[0]], index[pair[1]]] = True
    return BiPoset(GroundSet(tuple(index)), Diamond.from_bits(*(bits[key] for key in BPO_RELATION_KEYS)))


def serialize_structure(bp, comment=None):
    """Canonical .bpo text: pairs row-major, r1 before r2"""
    labels = bp.ground.labels
    out = []
    if comment:
        out.extend('# %s' % line for line in comment.splitlines())
    out.append('%s: %s' % (BPO_ELEMENTS_KEY, ' '.join(labels)))
    for key, rel in zip(BPO_RELATION_KEYS, (bp.d.r1, bp.d.r2)):
        out.extend('%s: %s %s' % (key, labels[i], labels[j]) for i, j in rel.pairs())
    return '\n'.join(out) + '\n'
