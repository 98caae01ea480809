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
import multiprocessing as mp

import numpy as np

from distsketch.common import metrics
from distsketch.common.errors import UsageError
from distsketch.space.distance_space import DistanceSpace

ROW_CHUNK = 256


class EstimateVector(object):
    """Per-node estimates of W(v) together with the sample they used."""

    def __init__(self, w_hat, sample, space, method='weighted'):
        self.w_hat = w_hat
        self.sample = sample
        self.space = space
        self.method = method

    @property
    def n(self):
        return len(self.w_hat)

    def __repr__(self):
        return '<EstimateVector n={} method={}>'.format(self.n, self.method)


class CentralityVector(object):
    """Closeness (n-1)/W(v); +inf marks a zero estimate."""

    def __init__(self, cc):
        self.cc = cc

    def __len__(self):
        return len(self.cc)


def _is_node_id(z):
    return isinstance(z, (int, np.integer))


def estimate_point(space, sample, z):
    """Inverse-probability estimate of W(z) from a weighted sample.

    `z` is a node id, or a coordinate vector when the space is a
    Euclidean point set.
    """
    if len(sample) == 0:
        return 0.0
    if _is_node_id(z):
        d = space.distances_from(z, sample.ids)
    else:
        d = space.distances_to_point(z, sample.ids)
    return float(np.sum(d / sample.probs))


def estimate_points(space, sample, queries):
    return np.asarray([estimate_point(space, sample, z) for z in queries],
                      dtype=np.float64)


def _accumulate(rows, probs, out):
    for row, p in zip(rows, probs):
        out += row / p
    return out


def _accumulate_helper(args):
    backing, ids, probs = args
    space = DistanceSpace(backing)
    out = np.zeros(space.n)
    for start in range(0, len(ids), ROW_CHUNK):
        rows = space.multi_source(ids[start:start + ROW_CHUNK])
        _accumulate(rows, probs[start:start + ROW_CHUNK], out)
    return out, space.counter.snapshot()


@metrics.timer('estimate_all_nodes')
def estimate_all_nodes(space, sample, num_parallel=1):
    """Estimates W(v) for every node with one SSSP per sampled node."""
    w_hat = np.zeros(space.n)
    ids, probs = sample.ids, sample.probs
    if num_parallel > 1 and len(ids) > 1:
        chunks = [c for c in np.array_split(np.arange(len(ids)), num_parallel)
                  if len(c)]
        with mp.Pool(min(num_parallel, len(chunks))) as pool:
            rets = pool.map(_accumulate_helper,
                            [(space.backing, ids[c], probs[c]) for c in chunks])
        # reduce in chunk order so the sum does not depend on scheduling
        for partial, used in rets:
            w_hat += partial
            space.counter.add(used.distance_evals, used.sssp_calls)
    else:
        for start in range(0, len(ids), ROW_CHUNK):
            rows = space.multi_source(ids[start:start + ROW_CHUNK])
            _accumulate(rows, probs[start:start + ROW_CHUNK], w_hat)
    logging.info('Estimated all-nodes sums from %d sampled nodes', len(ids))
    return EstimateVector(w_hat, sample, space)


def closeness(estimates):
    w_hat = estimates.w_hat if isinstance(estimates, EstimateVector) \
        else np.asarray(estimates, dtype=np.float64)
    n = len(w_hat)
    if n < 2:
        raise UsageError('closeness needs at least two nodes')
    cc = np.full(n, np.inf)
    np.divide(n - 1, w_hat, out=cc, where=w_hat != 0)
    return CentralityVector(cc)


def approx_median(estimates):
    """Node with the smallest estimate; ties go to the lowest id."""
    w_hat = estimates.w_hat if isinstance(estimates, EstimateVector) \
        else np.asarray(estimates, dtype=np.float64)
    if len(w_hat) == 0:
        raise UsageError('no estimates to choose a median from')
    return int(np.argmin(w_hat))
