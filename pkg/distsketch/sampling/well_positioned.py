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

import numpy as np

from distsketch.common.errors import InstanceTooSmall, UsageError
from distsketch.common.seeding import make_rng

CANDIDATE_FACTOR = 10
SAMPLE_FACTOR = 48
SAMPLE_QUANTILE = 0.55
RELAXED_FRACTION = 0.6
RELAXED_MIN_N = 20


class QuantileRank(object):
    """Rank Q of the quantile distance m_Q(v).

    Element v itself occupies rank 1 at distance 0.
    """

    def __init__(self, Q):
        Q = int(Q)
        if Q < 1:
            raise UsageError('quantile rank must be >= 1, got {}'.format(Q))
        self.Q = Q

    @classmethod
    def median(cls, n):
        """The ceil(1 + n/2) rank used by the median distance m(v)."""
        return cls(min(n, (n + 3) // 2))

    @classmethod
    def fraction(cls, n, q):
        rank = int(math.ceil(q * n - 1e-9))
        return cls(min(n, max(rank, cls.median(n).Q)))

    def resolve(self, n):
        if self.Q > n:
            raise UsageError('quantile rank {} exceeds n={}'.format(self.Q, n))
        return self.Q

    def __eq__(self, other):
        return isinstance(other, QuantileRank) and self.Q == other.Q

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.Q)

    def __repr__(self):
        return 'QuantileRank({})'.format(self.Q)


def resolve_rank(Q, n):
    if Q is None:
        Q = QuantileRank.median(n)
    elif not isinstance(Q, QuantileRank):
        Q = QuantileRank(Q)
    return Q.resolve(n)


def kth_smallest(rows, rank):
    """Rank-th smallest value (1-based) along the last axis."""
    return np.partition(rows, rank - 1, axis=-1)[..., rank - 1]


def median_distance(space, u, Q=None):
    rank = resolve_rank(Q, space.n)
    return float(kth_smallest(space.single_source(u).d, rank))


def find_well_positioned(space, seed, candidate_factor=CANDIDATE_FACTOR):
    """Node with smallest m(u) among ceil(c1 ln n) uniform candidates."""
    n = space.n
    if n == 1:
        return 0
    size = min(n, int(math.ceil(candidate_factor * math.log(n))))
    rng = make_rng(seed)
    candidates = np.sort(rng.choice(n, size=size, replace=False))
    rows = space.multi_source(candidates)
    medians = kth_smallest(rows, QuantileRank.median(n).Q)
    # candidates are sorted, so argmin breaks ties toward the lowest id
    best = int(candidates[np.argmin(medians)])
    logging.debug('Well positioned node %d with m=%f among %d candidates',
                  best, medians.min(), size)
    return best


def find_well_positioned_relaxed(space, seed,
                                 candidate_factor=CANDIDATE_FACTOR,
                                 sample_factor=SAMPLE_FACTOR,
                                 fallback=True):
    """Finds a 0.6n well positioned point with O(log^2 n) distances.

    Each of ceil(c1 ln n) uniform candidates is scored by the 0.55
    quantile of its distances to ceil(c2 ln n) uniform points drawn
    with replacement; the lowest score wins.
    """
    n = space.n
    if space.is_graph:
        raise UsageError('relaxed well positioned search needs a point set')
    if n < RELAXED_MIN_N:
        if not fallback:
            raise InstanceTooSmall(
                'relaxed search needs n >= {}, got {}'.format(
                    RELAXED_MIN_N, n))
        logging.warning('n=%d is below %d, falling back to the exact '
                        'well positioned search', n, RELAXED_MIN_N)
        return find_well_positioned(space, seed, candidate_factor)

    log_n = math.log(n)
    num_candidates = min(n, int(math.ceil(candidate_factor * log_n)))
    sample_size = int(math.ceil(sample_factor * log_n))
    rank = int(math.ceil(SAMPLE_QUANTILE * sample_size))
    rng = make_rng(seed)
    candidates = np.sort(rng.choice(n, size=num_candidates, replace=False))
    scores = np.empty(num_candidates)
    for i, v in enumerate(candidates):
        sampled = rng.integers(0, n, size=sample_size)
        scores[i] = kth_smallest(space.distances_from(v, sampled), rank)
    best = int(candidates[np.argmin(scores)])
    logging.debug('Relaxed well positioned point %d, sample quantile %f',
                  best, scores.min())
    return best


def relaxed_quantile(n):
    """Rank of the 0.6n quantile the relaxed search is guaranteed against."""
    return QuantileRank.fraction(n, RELAXED_FRACTION)


def relaxed_budget(n, candidate_factor=CANDIDATE_FACTOR,
                   sample_factor=SAMPLE_FACTOR):
    """Upper bound on distance evaluations of the relaxed search."""
    log_n = math.log(n)
    return int(math.ceil(candidate_factor * log_n)) * \
        int(math.ceil(sample_factor * log_n))
