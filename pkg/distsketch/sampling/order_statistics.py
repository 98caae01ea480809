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

import numpy as np

from distsketch.common.errors import BadDistribution, UsageError
from distsketch.common.seeding import make_rng

DISTRIBUTION_TOLERANCE = 1e-9


def sorted_uniform_draws(k, seed):
    """k sorted U[0,1) values in O(k) without sorting.

    Spacings of k exponential order statistics are independent with
    rates k, k-1, ..., 1; their prefix sums mapped through the
    exponential CDF are distributed as sorted uniforms.
    """
    k = int(k)
    if k < 1:
        raise UsageError('need at least one draw, got {}'.format(k))
    rng = make_rng(seed)
    spacings = rng.standard_exponential(k) / np.arange(k, 0, -1)
    draws = -np.expm1(-np.cumsum(spacings))
    return np.minimum(draws, np.nextafter(1.0, 0.0))


def draw_multiset(probs, k, seed):
    """k independent draws of node ids, returned in sorted order.

    Sorted uniforms are merged against the prefix sums of `probs`; node
    i receives every draw in [a_i, a_{i+1}).
    """
    probs = np.asarray(probs, dtype=np.float64)
    if probs.ndim != 1 or len(probs) == 0:
        raise BadDistribution('probabilities must be a non-empty vector')
    if np.any(probs < 0) or not np.all(np.isfinite(probs)):
        raise BadDistribution('probabilities must be finite and nonnegative')
    total = probs.sum()
    if abs(total - 1.0) > DISTRIBUTION_TOLERANCE:
        raise BadDistribution(
            'probabilities sum to {!r}, expected 1'.format(float(total)))

    draws = sorted_uniform_draws(k, seed)
    bounds = np.cumsum(probs)
    last = int(np.flatnonzero(probs > 0)[-1])
    # rounding in the prefix sums must not leak draws past the support
    bounds[last:] = np.inf
    below = np.searchsorted(draws, bounds, side='left')
    counts = np.diff(below, prepend=0)
    return np.repeat(np.arange(len(probs)), counts)
