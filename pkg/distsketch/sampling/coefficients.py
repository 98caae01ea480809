# Copyright 2021 The DistSketch Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# coding: utf-8

import logging
import math
import multiprocessing as mp
from collections import namedtuple

import numpy as np

from distsketch.common import metrics
from distsketch.common.errors import UsageError
from distsketch.common.seeding import make_rng, derive_seed
from distsketch.space.distance_space import DistanceSpace
from distsketch.sampling.well_positioned import CANDIDATE_FACTOR, \
    find_well_positioned, find_well_positioned_relaxed

BasePolicy = namedtuple('BasePolicy', ['kind', 'size'])

BASE_POLICY_KINDS = ('uniform', 'uniform-log', 'wp', 'relaxed-wp')


class CoefficientVector(object):
    """Universal PPS sampling coefficients and the base set they came from."""

    def __init__(self, gamma, base_set, space):
        self.gamma = gamma
        self.base_set = list(base_set)
        self.space = space

    @property
    def n(self):
        return len(self.gamma)

    @property
    def total(self):
        return float(self.gamma.sum())

    def normalized(self):
        return self.gamma / self.gamma.sum()

    def __repr__(self):
        return '<CoefficientVector n={} base_set={} total={!r}>'.format(
            self.n, self.base_set, self.total)


def _max_ratio(rows):
    w = rows.sum(axis=1)
    ratio = np.zeros_like(rows)
    positive = w > 0
    # an all-zero row (every element at one location) bounds nothing
    ratio[positive] = rows[positive] / w[positive, None]
    return ratio.max(axis=0)


def _max_ratio_helper(args):
    backing, sources = args
    space = DistanceSpace(backing)
    rows = space.multi_source(sources)
    return _max_ratio(rows), space.counter.snapshot()


@metrics.timer('compute_coefficients')
def compute_coefficients(space, base_set, num_parallel=1):
    base_set = sorted(set(space.check_node(u) for u in base_set))
    if not base_set:
        raise UsageError('base set S0 must not be empty')
    n = space.n
    gamma = np.full(n, 1.0 / n)

    if num_parallel > 1 and len(base_set) > 1:
        chunks = [c for c in np.array_split(base_set, num_parallel) if len(c)]
        with mp.Pool(min(num_parallel, len(chunks))) as pool:
            rets = pool.map(_max_ratio_helper,
                            [(space.backing, c) for c in chunks])
        for partial, used in rets:
            np.maximum(gamma, partial, out=gamma)
            space.counter.add(used.distance_evals, used.sssp_calls)
    else:
        rows = space.multi_source(base_set)
        np.maximum(gamma, _max_ratio(rows), out=gamma)

    logging.info('Computed coefficients from base set of %d nodes, '
                 'sum(gamma)=%f', len(base_set), gamma.sum())
    return CoefficientVector(gamma, base_set, space)


def parse_base_policy(text):
    """Parses `uniform:<b>`, `uniform-log`, `wp` or `relaxed-wp`."""
    text = text.strip()
    if text.startswith('uniform:'):
        try:
            size = int(text[len('uniform:'):])
        except ValueError:
            raise UsageError('bad base policy {!r}'.format(text))
        if size < 1:
            raise UsageError('uniform base needs at least one node')
        return BasePolicy('uniform', size)
    if text in BASE_POLICY_KINDS[1:]:
        return BasePolicy(text, None)
    raise UsageError('unknown base policy {!r}, expected one of '
                     'uniform:<b>, uniform-log, wp, relaxed-wp'.format(text))


def choose_base_set(space, policy, seed):
    if isinstance(policy, str):
        policy = parse_base_policy(policy)
    n = space.n
    if policy.kind in ('uniform', 'uniform-log'):
        if policy.kind == 'uniform':
            size = policy.size
        else:
            size = int(math.ceil(CANDIDATE_FACTOR * math.log(max(n, 2))))
        rng = make_rng(derive_seed(seed, 1))
        return sorted(rng.choice(n, size=min(size, n), replace=False).tolist())
    if policy.kind == 'wp':
        return [find_well_positioned(space, derive_seed(seed, 2))]
    return [find_well_positioned_relaxed(space, derive_seed(seed, 3))]
