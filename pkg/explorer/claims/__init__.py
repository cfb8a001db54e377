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

# Currently, it is implemented as:
# Every claim has its own class under this package and describes its
#   instance space as ordered strata of mixed-radix coordinates.

from collections import namedtuple

from explorer.converters.bpo import parse_structure, serialize_structure
from explorer.converters.mapping import parse_mapping, serialize_mapping
from explorer.ds import BiPoset, Mapping
from explorer.managers import BaseManager
from explorer.managers.axioms import AxiomsManager
from explorer.managers.enumeration import EnumerationManager

__all__ = ['ClaimBase', 'StructureClaim', 'Stratum', 'scale_key']


# scale: tuple recorded in the Finding; radices: size of each coordinate
Stratum = namedtuple('Stratum', ['scale', 'radices'])


def scale_key(sizes):
    """Smallest structures first: largest size, then the sizes in order"""
    return (max(sizes),) + tuple(sizes)


class ClaimBase(BaseManager):
    """
    Base for registered claims.

    check() returns None when the instance satisfies the claim and a
    details dict otherwise; for existential claims a dict is the sought
    witness. Details may carry extra Mapping values named in mapping_types.
    """

    claim_id = None
    anchor = ''
    existential = False
    # settings knobs capping n_max for this claim
    scale_settings = ()
    # mapping name -> (source structure name, target structure name)
    mapping_types = {}

    axioms = AxiomsManager()
    enumeration = EnumerationManager()

    def effective_scale(self, n_max):
        for setting in self.scale_settings:
            cap = self.config(setting, n_max)
            if n_max > cap:
                self.app_logger('WARNING', "%s clamps n_max %i to %i (%s)" % (self.claim_id, n_max, cap, setting))
                n_max = cap
        return n_max

    def strata(self, n_max):
        raise NotImplementedError

    def materialize(self, stratum, coords):
        raise NotImplementedError

    def check(self, instance):
        raise NotImplementedError

    def check_witness(self, instance):
        """Check one loaded witness; claims sweeping many candidates per instance narrow it down here"""
        return self.check(instance)

    def pools(self, sizes):
        return [self.enumeration.pool(n) for n in sizes]

    @staticmethod
    def fetch(pools, coords):
        """Structures for the leading coordinates, or None if any is invalid"""
        structures = []
        for pool, index in zip(pools, coords):
            bp = pool.get(index)
            if bp is None:
                return None
            structures.append(bp)
        return structures

    def serialize(self, instance, details):
        merged = dict(instance)
        merged.update(details or {})
        witness = {'structures': {}, 'mappings': {}, 'details': {}}
        for name, value in merged.items():
            if isinstance(value, BiPoset):
                witness['structures'][name] = serialize_structure(value)
            elif isinstance(value, Mapping):
                src, dst = self.mapping_types[name]
                witness['mappings'][name] = serialize_mapping(
                    value, merged[src].ground, merged[dst].ground)
            else:
                witness['details'][name] = value
        return witness

    def load(self, witness):
        """Rebuild an instance from a serialized witness"""
        instance = {}
        for name, text in witness.get('structures', {}).items():
            instance[name] = self.axioms.validate(parse_structure(text))
        for name, text in witness.get('mappings', {}).items():
            src, dst = self.mapping_types[name]
            instance[name] = parse_mapping(text, instance[src].ground, instance[dst].ground)
        return instance

    def replay(self, witness):
        return self.check_witness(self.load(witness))


class StructureClaim(ClaimBase):
    """One instance per enumerated structure, smallest n first"""

    def strata(self, n_max):
        return [Stratum((n,), (self.enumeration.pool(n).size,)) for n in range(1, n_max + 1)]

    def materialize(self, stratum, coords):
        structures = self.fetch(self.pools(stratum.scale), coords)
        return None if structures is None else {'P': structures[0]}
