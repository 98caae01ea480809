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
import threading
import multiprocessing as mp
from collections import OrderedDict, namedtuple

import numpy as np
from scipy.sparse import csgraph

from distsketch.common import metrics
from distsketch.common.errors import DegenerateMetric
from distsketch.space.distance_space import DistanceSpace
from distsketch.sampling.well_positioned import QuantileRank, \
    resolve_rank, kth_smallest

ORACLE_CACHE_SIZE = 8
BOUND_TOLERANCE = 1e-9
EXACT_FLOAT_LIMIT = 2 ** 53

_cache_lock = threading.Lock()
_matrix_cache = OrderedDict()

DistributionCheck = namedtuple(
    'DistributionCheck',
    ['diameter', 'min_average', 'max_average', 'spread_count',
     'spread_required'])


def _rows_helper(args):
    backing, sources = args
    space = DistanceSpace(backing)
    return space.multi_source(sources), space.counter.snapshot()


def _build_matrix(space, num_parallel):
    sources = np.arange(space.n)
    if num_parallel > 1 and space.n > 1:
        chunks = [c for c in np.array_split(sources, num_parallel) if len(c)]
        with mp.Pool(min(num_parallel, len(chunks))) as pool:
            rets = pool.map(_rows_helper,
                            [(space.backing, c) for c in chunks])
        for _, used in rets:
            space.counter.add(used.distance_evals, used.sssp_calls)
        return np.vstack([rows for rows, _ in rets])
    return space.multi_source(sources)


@metrics.timer('exact_distance_matrix')
def exact_distance_matrix(space, num_parallel=1):
    """All n x n exact distances, cached by the content fingerprint.

    The returned array is read-only and shared between callers.
    """
    key = space.fingerprint
    with _cache_lock:
        matrix = _matrix_cache.get(key)
        if matrix is not None:
            _matrix_cache.move_to_end(key)
            return matrix
    matrix = _build_matrix(space, num_parallel)
    matrix.setflags(write=False)
    with _cache_lock:
        _matrix_cache[key] = matrix
        while len(_matrix_cache) > ORACLE_CACHE_SIZE:
            _matrix_cache.popitem(last=False)
    logging.info('Oracle built %d x %d distance matrix', space.n, space.n)
    return matrix


def clear_cache():
    with _cache_lock:
        _matrix_cache.clear()


def exact_w_all(space):
    return exact_distance_matrix(space).sum(axis=1)


def exact_aps(space):
    return 0.5 * float(exact_w_all(space).sum())


def exact_gamma_bar(space):
    """gamma_bar_v = max over z of dist(z, v) / W(z)."""
    matrix = exact_distance_matrix(space)
    w = matrix.sum(axis=1)
    if np.any(w == 0):
        raise DegenerateMetric(
            'W(z) = 0 for node {}; gamma_bar is undefined'.format(
                int(np.flatnonzero(w == 0)[0])))
    return (matrix / w[:, None]).max(axis=0)


def exact_quantile_distances(space, Q=None):
    """m_Q(v) for every v, self counted at rank 1."""
    rank = resolve_rank(Q, space.n)
    return kth_smallest(np.array(exact_distance_matrix(space)), rank)


def min_median(space, Q=None):
    return float(exact_quantile_distances(space, Q).min())


def classify_well_positioned(space, Q=None):
    """u is well positioned when m(u) <= 2 MinMed_Q."""
    medians = exact_quantile_distances(space, QuantileRank.median(space.n))
    return medians <= 2 * min_median(space, Q)


def check_distance_bounds(space):
    """Average-distance facts every metric satisfies.

    With D the diameter: every W(v)/n lies in [D/n, D], the largest is
    at least D/2, and at least ceil(n/2) nodes have W(v) <= 3 W(z) for
    the exact 1-median z.
    """
    w = exact_w_all(space)
    n = space.n
    average = w / n
    diameter = float(exact_distance_matrix(space).max())
    spread_count = int(np.count_nonzero(w <= 3 * w.min() + BOUND_TOLERANCE))
    check = DistributionCheck(diameter, float(average.min()),
                              float(average.max()), spread_count,
                              int(math.ceil(n / 2.0)))
    logging.debug('Distribution check %s', check)
    return check


def distance_bounds_hold(check, n, tolerance=BOUND_TOLERANCE):
    slack = tolerance * max(1.0, check.diameter)
    return check.min_average >= check.diameter / n - slack and \
        check.max_average <= check.diameter + slack and \
        check.max_average >= check.diameter / 2 - slack and \
        check.spread_count >= check.spread_required


def floyd_warshall_exact(matrix):
    """All-pairs shortest paths on an integer length matrix.

    Every entry is a possible edge, zeros included. Path sums stay below
    2**53, so the float64 result casts back to int64 exactly.
    """
    lengths = np.array(matrix, dtype=np.int64)
    assert lengths.ndim == 2 and lengths.shape[0] == lengths.shape[1], \
        "length matrix must be square"
    assert lengths.shape[0] * int(np.abs(lengths).max(initial=0)) \
        < EXACT_FLOAT_LIMIT, "path sums would lose float64 precision"
    graph = csgraph.csgraph_from_dense(lengths.astype(np.float64),
                                       null_value=np.inf)
    dist = csgraph.floyd_warshall(graph, directed=True)
    return np.rint(dist).astype(np.int64)

