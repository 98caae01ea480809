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

from distsketch.common.errors import DataError, UsageError
from distsketch.common.seeding import make_rng


class WeightedSample(object):
    """Poisson sample S = {(v, p_v)} drawn with p_v = min(1, k gamma_v)."""

    def __init__(self, ids, probs, k, seed, n):
        ids = np.asarray(ids, dtype=np.int64)
        probs = np.asarray(probs, dtype=np.float64)
        if ids.shape != probs.shape:
            raise DataError('ids and probabilities differ in length')
        if len(np.unique(ids)) != len(ids):
            raise DataError('a node appears more than once in the sample')
        if np.any((probs <= 0) | (probs > 1)):
            raise DataError('inclusion probabilities must lie in (0, 1]')
        if len(ids) and (ids.min() < 0 or ids.max() >= n):
            raise DataError('sample ids out of range for n={}'.format(n))
        order = np.argsort(ids, kind='mergesort')
        self.ids = ids[order]
        self.probs = probs[order]
        self.k = float(k)
        self.seed = seed
        self.n = int(n)

    @property
    def entries(self):
        return list(zip(self.ids.tolist(), self.probs.tolist()))

    def __len__(self):
        return len(self.ids)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, WeightedSample) and \
            self.n == other.n and self.k == other.k and \
            self.seed == other.seed and \
            np.array_equal(self.ids, other.ids) and \
            np.array_equal(self.probs, other.probs)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<WeightedSample size={} k={!r} seed={}>'.format(
            len(self), self.k, self.seed)


def inclusion_probabilities(gamma, k):
    return np.minimum(1.0, k * gamma)


def draw_sample(coeffs, k, seed):
    if not k > 0:
        raise UsageError('sample size parameter k must be positive')
    probs = inclusion_probabilities(coeffs.gamma, k)
    rng = make_rng(seed)
    chosen = np.flatnonzero(rng.random(len(probs)) < probs)
    logging.info('Drew Poisson sample of %d nodes, expected %f',
                 len(chosen), probs.sum())
    return WeightedSample(chosen, probs[chosen], k, seed, len(probs))


def k_for_cv(epsilon):
    """Per-query CV regime: k = ceil(eps^-2)."""
    _check_epsilon(epsilon)
    return int(math.ceil(epsilon ** -2 - 1e-9))


def k_for_high_probability(epsilon, n):
    """High probability regime: k = ceil(eps^-2 ln n)."""
    _check_epsilon(epsilon)
    return int(math.ceil(epsilon ** -2 * math.log(max(n, 2)) - 1e-9))


def k_for_pairs(epsilon, factor=64):
    _check_epsilon(epsilon)
    return int(math.ceil(factor * epsilon ** -2 - 1e-9))


def _check_epsilon(epsilon):
    if not 0 < epsilon < 1:
        raise UsageError('epsilon must lie in (0, 1), got {}'.format(epsilon))
