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
Data structures shared by every manager.

Elements are dense indices 0..n-1 in label order; labels only matter at
the I/O boundary. Relations are n x n read-only numpy boolean matrices.
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional, Tuple

import numpy as np

from explorer.constants import ENUMERATION_LABELS
from explorer.exceptions import UsageError

__all__ = [
    'GroundSet', 'Rel', 'Diamond', 'BiPoset', 'Mapping', 'GaloisPair',
    'AxiomResult', 'AxiomVerdict', 'Verdict', 'AdjointReport',
    'ExtremalReport', 'chain', 'diamond_leq', 'off_diagonal_cells',
]


def _frozen_bool_matrix(bits):
    matrix = np.array(bits, dtype=bool)
    matrix.flags.writeable = False
    return matrix


@lru_cache(maxsize=None)
def off_diagonal_cells(n):
    """Row-major (rows, cols) index arrays of the n(n-1) off-diagonal cells."""
    rows, cols = np.nonzero(~np.eye(n, dtype=bool))
    rows.flags.writeable = False
    cols.flags.writeable = False
    return rows, cols


@dataclass(frozen=True)
class GroundSet:
    labels: Tuple[str, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise UsageError("ground set must be non-empty")
        if any(not isinstance(label, str) or not label for label in labels):
            raise UsageError("element labels must be non-empty text")
        if len(set(labels)) != len(labels):
            raise UsageError("duplicate element labels: %s" % ' '.join(labels))
        object.__setattr__(self, 'labels', labels)

    @property
    def n(self):
        return len(self.labels)

    @classmethod
    def default(cls, n):
        if n <= len(ENUMERATION_LABELS):
            return cls(ENUMERATION_LABELS[:n])
        return cls(tuple('e%i' % i for i in range(n)))

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise UsageError("unknown element %s" % label)


@dataclass(frozen=True, eq=False)
class Rel:
    """One relation component, bits[i][j] iff (i, j) is in the relation"""

    bits: np.ndarray

    def __post_init__(self):
        matrix = _frozen_bool_matrix(self.bits)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise UsageError("relation bits must be square, got shape %s" % (matrix.shape,))
        object.__setattr__(self, 'bits', matrix)

    @property
    def n(self):
        return self.bits.shape[0]

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def full(cls, n):
        return cls(np.ones((n, n), dtype=bool))

    @classmethod
    def empty(cls, n):
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def from_pairs(cls, n, pairs):
        matrix = np.zeros((n, n), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise UsageError("pair (%i, %i) out of range for n=%i" % (i, j, n))
            matrix[i, j] = True
        return cls(matrix)

    @classmethod
    def from_predicate(cls, values, predicate):
        # materialized once; nothing stays lazy
        return cls([[bool(predicate(x, y)) for y in values] for x in values])

    def transpose(self):
        return Rel(self.bits.T)

    def __and__(self, other):
        if other.n != self.n:
            raise UsageError("dimension mismatch: %i vs %i" % (self.n, other.n))
        return Rel(self.bits & other.bits)

    def __eq__(self, other):
        return isinstance(other, Rel) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def contains(self, i, j):
        return bool(self.bits[i, j])

    def pairs(self):
        return [(int(i), int(j)) for i, j in np.argwhere(self.bits)]

    def is_reflexive(self):
        return bool(self.bits.diagonal().all())


@dataclass(frozen=True, eq=False)
class Diamond:
    """The relation pair (r1, r2) on one ground set"""

    r1: Rel
    r2: Rel

    def __post_init__(self):
        if self.r1.n != self.r2.n:
            raise UsageError("diamond components differ in size: %i vs %i" % (self.r1.n, self.r2.n))

    @property
    def n(self):
        return self.r1.n

    @classmethod
    def from_bits(cls, r1_bits, r2_bits):
        return cls(Rel(r1_bits), Rel(r2_bits))

    @classmethod
    def from_code(cls, n, code):
        """
        Decode a canonical code: off-diagonal cells in row-major order,
        bit k is r1 cell k and bit k + n(n-1) is r2 cell k; diagonal fixed.
        """
        rows, cols = off_diagonal_cells(n)
        m = len(rows)
        if not 0 <= code < 1 << (2 * m):
            raise UsageError("code %i out of range for n=%i" % (code, n))
        flags = [(code >> k) & 1 == 1 for k in range(2 * m)]
        r1, r2 = np.eye(n, dtype=bool), np.eye(n, dtype=bool)
        r1[rows, cols] = flags[:m]
        r2[rows, cols] = flags[m:]
        return cls.from_bits(r1, r2)

    @property
    def code(self):
        if not (self.r1.is_reflexive() and self.r2.is_reflexive()):
            raise UsageError("only reflexive diamonds carry a canonical code")
        rows, cols = off_diagonal_cells(self.n)
        flags = np.concatenate([self.r1.bits[rows, cols], self.r2.bits[rows, cols]])
        return sum(1 << k for k in np.flatnonzero(flags).tolist())

    @cached_property
    def leq_matrix(self):
        return _frozen_bool_matrix(self.r1.bits & self.r2.bits)

    @cached_property
    def chain_tensor(self):
        """chains[a, b, c] iff a r1 b and b r2 c"""
        return _frozen_bool_matrix(self.r1.bits[:, :, None] & self.r2.bits[None, :, :])

    def _check_index(self, *indices):
        for index in indices:
            if not 0 <= index < self.n:
                raise UsageError("index %i out of range for n=%i" % (index, self.n))

    def chain(self, a, b, c):
        self._check_index(a, b, c)
        return bool(self.r1.bits[a, b] and self.r2.bits[b, c])

    def leq(self, a, b):
        self._check_index(a, b)
        return bool(self.r1.bits[a, b] and self.r2.bits[a, b])

    def __eq__(self, other):
        return isinstance(other, Diamond) and self.r1 == other.r1 and self.r2 == other.r2

    def __hash__(self):
        return hash((self.r1, self.r2))


def chain(d, a, b, c):
    """a r1 b and b r2 c"""
    return d.chain(a, b, c)


def diamond_leq(d, a, b):
    """a r1 b and a r2 b"""
    return d.leq(a, b)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    detail: Optional[str] = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise UsageError("a passing %s result carries no witness" % self.name)
        if not self.passed and self.witness is None:
            raise UsageError("a failing %s result needs a witness" % self.name)


@dataclass(frozen=True)
class AxiomVerdict:
    reflexive: AxiomResult
    antisymmetric: AxiomResult
    transitive: AxiomResult

    @property
    def passed(self):
        return all(result.passed for result in self.results())

    def results(self):
        return self.reflexive, self.antisymmetric, self.transitive

    def failures(self):
        return [result for result in self.results() if not result.passed]


@dataclass(frozen=True)
class BiPoset:
    ground: GroundSet
    d: Diamond
    certificate: Optional[AxiomVerdict] = field(default=None, compare=False)

    def __post_init__(self):
        if self.ground.n != self.d.n:
            raise UsageError("ground set has %i elements, diamond has %i" % (self.ground.n, self.d.n))

    @property
    def n(self):
        return self.ground.n

    @property
    def is_validated(self):
        return self.certificate is not None and self.certificate.passed

    @classmethod
    def unlabeled(cls, d):
        return cls(GroundSet.default(d.n), d)

    def with_certificate(self, certificate):
        return BiPoset(self.ground, self.d, certificate)

    def with_diamond(self, d):
        return BiPoset(self.ground, d)


@dataclass(frozen=True)
class Mapping:
    """Total function from range(src_n) into range(dst_n)"""

    img: Tuple[int, ...]
    dst_n: int

    def __post_init__(self):
        img = tuple(int(value) for value in self.img)
        if not img:
            raise UsageError("a mapping needs a non-empty source")
        if any(not 0 <= value < self.dst_n for value in img):
            raise UsageError("mapping image %s out of range for target size %i" % (img, self.dst_n))
        object.__setattr__(self, 'img', img)

    @property
    def src_n(self):
        return len(self.img)

    @cached_property
    def array(self):
        img = np.array(self.img, dtype=np.intp)
        img.flags.writeable = False
        return img

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), n)

    @classmethod
    def constant(cls, src_n, dst_n, value):
        return cls((value,) * src_n, dst_n)

    def __call__(self, index):
        return self.img[index]

    def is_bijective(self):
        return self.src_n == self.dst_n and len(set(self.img)) == self.src_n

    def inverse(self):
        if not self.is_bijective():
            raise UsageError("mapping %s is not a bijection" % (self.img,))
        inverse = [0] * self.src_n
        for a, b in enumerate(self.img):
            inverse[b] = a
        return Mapping(tuple(inverse), self.src_n)

    def then(self, other):
        """other after self"""
        if other.src_n != self.dst_n:
            raise UsageError("cannot compose: %i-element target into %i-element source"
                             % (self.dst_n, other.src_n))
        return Mapping(tuple(other.img[b] for b in self.img), other.dst_n)


@dataclass(frozen=True)
class GaloisPair:
    """f: P -> Q and g: Q -> P"""

    f: Mapping
    g: Mapping

    def __post_init__(self):
        if self.f.src_n != self.g.dst_n or self.f.dst_n != self.g.src_n:
            raise UsageError("pair does not type-check: f is %i->%i, g is %i->%i"
                             % (self.f.src_n, self.f.dst_n, self.g.src_n, self.g.dst_n))

    def swapped(self):
        return GaloisPair(self.g, self.f)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    reason: Optional[str] = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class AdjointReport:
    f_isotone: bool
    g_isotone: bool
    unit_holds: bool
    counit_holds: bool

    @property
    def all_hold(self):
        return self.f_isotone and self.g_isotone and self.unit_holds and self.counit_holds

    def as_dict(self):
        return {
            'f_isotone': self.f_isotone, 'g_isotone': self.g_isotone,
            'unit_holds': self.unit_holds, 'counit_holds': self.counit_holds,
        }


@dataclass(frozen=True)
class ExtremalReport:
    x: Optional[int]
    y: Optional[int]
    g_max: Optional[int]
    g_min: Optional[int]
    u: Optional[int]
    v: Optional[int]
    l_max: Optional[int]
    l_min: Optional[int]
    bounded: bool
    notes: Tuple[str, ...] = ()
    anomalies: Tuple[str, ...] = ()

    @property
    def unbounded(self):
        return not self.bounded
