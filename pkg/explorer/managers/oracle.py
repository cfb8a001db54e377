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
Small-model oracle: run a registered claim over every instance of its
space (or a seeded sample of it) and report a Finding.

The space is an ordered list of strata; an instance is a stratum plus
mixed-radix coordinates. Instances are visited in ascending order, so
the first hit is the least one: smallest scale, then least structure,
then least witness.
"""

from bisect import bisect_right
from dataclasses import asdict, dataclass, field
from itertools import accumulate
from math import prod
from typing import Optional

import numpy as np

from explorer.claims.mapper import ClaimMapper
from explorer.constants import ORACLE_MODES, VERDICTS
from explorer.exceptions import UsageError
from explorer.managers import BaseManager
from explorer.managers.enumeration import EnumerationManager

__all__ = ['OracleManager', 'Finding', 'Plan']


@dataclass(frozen=True)
class Finding:
    claim: str
    verdict: str
    scale: dict
    instances_checked: int
    mode: str
    space: int
    seed: Optional[int] = None
    budget: Optional[int] = None
    witness: Optional[dict] = None
    anchor: str = ''
    existential: bool = False

    @property
    def verified(self):
        return self.verdict == VERDICTS[0]

    def as_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


@dataclass
class Plan:
    """Deterministic visiting order for one (claim, n_max, budget, seed)"""

    strata: list
    mode: str
    space: int
    offsets: list = field(default_factory=list)
    samples: list = field(default_factory=list)

    @property
    def size(self):
        return self.space if self.mode == ORACLE_MODES[0] else len(self.samples)

    def instance_at(self, position):
        """(stratum, coords) visited at position"""
        if self.mode == ORACLE_MODES[1]:
            stratum_index, coords = self.samples[position]
            return self.strata[stratum_index], coords
        stratum_index = bisect_right(self.offsets, position) - 1
        index = position - self.offsets[stratum_index]
        stratum = self.strata[stratum_index]
        coords = []
        for radix in reversed(stratum.radices):
            index, digit = divmod(index, radix)
            coords.append(digit)
        return stratum, tuple(reversed(coords))


def _plain(value):
    """JSON/YAML friendly copy: tuples to lists, numpy scalars to python"""
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.generic):
        return value.item()
    return value


class OracleManager(BaseManager):
    """Enumerate binary posets and verify registered claims"""

    claim_mapper = ClaimMapper()
    enumeration = EnumerationManager()

    def enumerate_biposets(self, n):
        return self.enumeration.enumerate_biposets(n)

    def _defaults(self, budget, seed):
        if budget is None:
            budget = self.config('ORACLE_DEFAULT_BUDGET', 200000)
        if seed is None:
            seed = self.config('ORACLE_DEFAULT_SEED', 0)
        if budget is not None and budget < 1:
            raise UsageError("budget must be positive, got %s" % budget)
        return budget, seed

    def plan(self, claim, n_max, budget, seed):
        strata = claim.strata(n_max)
        sizes = [prod(stratum.radices) for stratum in strata]
        space = sum(sizes)
        offsets = [0] + list(accumulate(sizes))[:-1]
        if space <= budget:
            return Plan(strata, ORACLE_MODES[0], space, offsets=offsets)

        rng = np.random.default_rng(seed)
        weights = np.array([float(size) for size in sizes])
        picks = rng.choice(len(strata), size=budget, p=weights / weights.sum())
        samples = set()
        for stratum_index in range(len(strata)):
            count = int((picks == stratum_index).sum())
            if not count:
                continue
            columns = [rng.integers(0, radix, size=count) for radix in strata[stratum_index].radices]
            samples.update((stratum_index, tuple(int(c) for c in row)) for row in zip(*columns))
        return Plan(strata, ORACLE_MODES[1], space, samples=sorted(samples))

    def _prepare(self, claim_id, n_max):
        claim = self.claim_mapper.get(claim_id)
        self.enumeration.check_scale(n_max)
        return claim, claim.effective_scale(n_max)

    def run_chunk(self, claim_id, n_max, budget, seed, start, stop):
        """Visit positions [start, stop) and stop at the first hit"""
        claim, n_max = self._prepare(claim_id, n_max)
        return self._visit(claim, self.plan(claim, n_max, budget, seed), start, stop)

    @staticmethod
    def _visit(claim, plan, start, stop):
        checked = 0
        for position in range(start, min(stop, plan.size)):
            stratum, coords = plan.instance_at(position)
            instance = claim.materialize(stratum, coords)
            if instance is None:
                continue
            checked += 1
            details = claim.check(instance)
            if details is not None:
                return {
                    'checked': checked,
                    'hit': _plain({
                        'position': position,
                        'scale': list(stratum.scale),
                        'witness': claim.serialize(instance, details),
                    }),
                }
        return {'checked': checked, 'hit': None}

    @staticmethod
    def partition(size, workers):
        """Contiguous [start, stop) ranges covering range(size)"""
        workers = max(1, min(workers, size or 1))
        bounds = np.linspace(0, size, workers + 1).round().astype(int).tolist()
        return list(zip(bounds[:-1], bounds[1:]))

    def verify_claim(self, claim_id, n_max, budget=None, seed=None, workers=None):
        budget, seed = self._defaults(budget, seed)
        if workers is None:
            workers = self.config('ORACLE_DEFAULT_WORKERS', 1)
        claim, n_eff = self._prepare(claim_id, n_max)
        plan = self.plan(claim, n_eff, budget, seed)
        self.app_logger('INFO', "verifying %s at n_max=%i: %s over %i of %i instances" % (
            claim.claim_id, n_eff, plan.mode, plan.size, plan.space))

        chunks = self.partition(plan.size, workers)
        if len(chunks) == 1:
            results = [self._visit(claim, plan, *chunks[0])]
        else:
            from celery import group
            from explorer.tasks import task_verify_claim_chunk
            job = group(task_verify_claim_chunk.s(claim.claim_id, n_eff, budget, seed, start, stop)
                        for start, stop in chunks)
            results = job.apply_async().get()

        checked, hit = 0, None
        for index, result in enumerate(results):
            checked += result['checked']
            if result['hit'] is not None:
                hit = result['hit']
                self.app_logger('DEBUG', "least hit for %s in chunk %i at position %i"
                                % (claim.claim_id, index, hit['position']))
                break

        found = hit is not None
        verdict = VERDICTS[0] if found == claim.existential else VERDICTS[1]
        scale = {'n_max': n_eff}
        if found:
            scale['witness'] = hit['scale']
        finding = Finding(
            claim=claim.claim_id, verdict=verdict, scale=scale,
            instances_checked=checked, mode=plan.mode, space=plan.space,
            seed=seed if plan.mode == ORACLE_MODES[1] else None, budget=budget,
            witness=hit['witness'] if found else None,
            anchor=claim.anchor, existential=claim.existential,
        )
        self.app_logger('INFO', "%s: %s after %i instances" % (claim.claim_id, verdict, checked))
        return finding

    def replay_finding(self, finding):
        """True when the recorded witness still exhibits what the Finding says"""
        if finding.witness is None:
            raise UsageError("finding for %s carries no witness to replay" % finding.claim)
        claim = self.claim_mapper.get(finding.claim)
        return claim.replay(finding.witness) is not None
