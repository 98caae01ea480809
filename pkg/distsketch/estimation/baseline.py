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

from distsketch.common.errors import UsageError
from distsketch.common.seeding import make_rng
from distsketch.estimation.estimators import EstimateVector

ORDER_EXPONENT = 64


def uniform_estimate_w(space, Q, z):
    """Scaled sample sum (n/|Q|) sum_{a in Q} dist(z, a)."""
    Q = np.asarray(list(Q), dtype=np.int64)
    if len(Q) == 0:
        raise UsageError('uniform sample must not be empty')
    if isinstance(z, (int, np.integer)):
        d = space.distances_from(z, Q)
    else:
        d = space.distances_to_point(z, Q)
    return space.n / float(len(Q)) * float(np.sum(d))


def sample_sums(space, Q):
    """W_Q(v) = sum over a in Q of dist(v, a), for every v."""
    Q = np.asarray(list(Q), dtype=np.int64)
    if len(Q) == 0:
        raise UsageError('uniform sample must not be empty')
    out = np.zeros(space.n)
    for row in space.multi_source(Q):
        out += row
    return out


def uniform_all_nodes(space, Q):
    Q = np.asarray(list(Q), dtype=np.int64)
    w_hat = space.n / float(len(Q)) * sample_sums(space, Q)
    return EstimateVector(w_hat, None, space, method='uniform')


def uniform_sample_size(n, epsilon, delta):
    if not 0 < epsilon < 1 or not 0 < delta < 1:
        raise UsageError('epsilon and delta must lie in (0, 1)')
    size = int(math.ceil(ORDER_EXPONENT * epsilon ** -2 * math.log(n / delta)))
    return min(n, size)


def uniform_median(space, epsilon, delta, seed):
    """Sample 1-median over a uniform Q of size 64 eps^-2 ln(n/delta)."""
    n = space.n
    size = uniform_sample_size(n, epsilon, delta)
    Q = np.sort(make_rng(seed).choice(n, size=size, replace=False))
    sums = sample_sums(space, Q)
    best = int(np.argmin(sums))
    logging.info('Uniform median %d from a sample of %d nodes', best, size)
    return best
