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
import threading
from collections import OrderedDict

import numpy as np
from cityhash import CityHash64 # pylint: disable=no-name-in-module

from distsketch.common.errors import DisconnectedGraph, UnreachablePair, \
    UsageError
from distsketch.space.counter import DistanceCounter
from distsketch.space.graph import Graph
from distsketch.space.points import PointSet

ROW_CACHE_SIZE = 64


class DistanceVector(object):
    """Exact distances from `source` to every element; `sum` is W(source)."""

    def __init__(self, source, d):
        self.source = int(source)
        self.d = d
        self.sum = float(d.sum())

    def __len__(self):
        return len(self.d)

    def __repr__(self):
        return '<DistanceVector source={} W={!r}>'.format(
            self.source, self.sum)


class DistanceSpace(object):
    """One distance-query interface over a Graph or a PointSet.

    The backing data is never modified. For point sets every resolved
    pairwise distance between distinct ids is counted; for graphs every
    shortest-path computation is counted.
    """

    def __init__(self, backing):
        if not isinstance(backing, (Graph, PointSet)):
            raise UsageError('backing must be a Graph or a PointSet')
        self.backing = backing
        self.n = backing.n
        self.counter = DistanceCounter()
        self._row_cache = OrderedDict()
        self._cache_lock = threading.Lock()
        self._fingerprint = None

    @property
    def is_graph(self):
        return isinstance(self.backing, Graph)

    @property
    def is_euclidean(self):
        return not self.is_graph and self.backing.is_euclidean

    @property
    def fingerprint(self):
        if self._fingerprint is None:
            self._fingerprint = CityHash64(self.backing.fingerprint_bytes())
        return self._fingerprint

    def check_node(self, v):
        if not 0 <= int(v) < self.n:
            raise UsageError('node id {} out of range [0, {})'.format(
                v, self.n))
        return int(v)

    def _graph_rows(self, sources):
        rows = self.backing.shortest_paths(sources)
        self.counter.add(sssp_calls=len(rows))
        if not np.all(np.isfinite(rows)):
            bad = np.argwhere(~np.isfinite(rows))[0]
            raise DisconnectedGraph(
                'graph is disconnected: node {} unreachable from {}'.format(
                    bad[1], np.atleast_1d(sources)[bad[0]]))
        return rows

    def _cached_graph_row(self, u):
        with self._cache_lock:
            row = self._row_cache.get(u)
            if row is not None:
                self._row_cache.move_to_end(u)
                return row
            rows = self.backing.shortest_paths([u])
            self.counter.add(sssp_calls=1)
            row = rows[0]
            self._row_cache[u] = row
            if len(self._row_cache) > ROW_CACHE_SIZE:
                self._row_cache.popitem(last=False)
            return row

    def distance(self, u, v):
        u, v = self.check_node(u), self.check_node(v)
        if u == v:
            return 0.0
        if self.is_graph:
            d = self._cached_graph_row(u)[v]
            if not np.isfinite(d):
                raise UnreachablePair(u, v)
            return float(d)
        self.counter.add(distance_evals=1)
        return float(self.backing.pairwise([u], [v])[0])

    def single_source(self, s):
        s = self.check_node(s)
        if self.is_graph:
            d = self._graph_rows([s])[0]
        else:
            d = self.backing.row(s)
            self.counter.add(distance_evals=self.n - 1)
        logging.debug('single source from %d, W=%f', s, d.sum())
        return DistanceVector(s, d)

    def multi_source(self, sources):
        """Distance rows for several sources, one SSSP (or row) each."""
        sources = np.asarray(sources, dtype=np.int64)
        if len(sources) == 0:
            return np.zeros((0, self.n))
        if self.is_graph:
            return self._graph_rows(sources)
        self.counter.add(distance_evals=len(sources) * (self.n - 1))
        return self.backing.rows(sources)

    def distances_from(self, s, ids):
        """dist(s, x) for x in ids: |ids| evaluations, or one SSSP."""
        s = self.check_node(s)
        ids = np.asarray(ids, dtype=np.int64)
        if self.is_graph:
            row = self._cached_graph_row(s)
            out = row[ids]
            if not np.all(np.isfinite(out)):
                raise UnreachablePair(s, int(ids[~np.isfinite(out)][0]))
            return out
        self.counter.add(distance_evals=int(np.count_nonzero(ids != s)))
        return self.backing.pairwise(np.full(len(ids), s), ids)

    def pairwise(self, us, vs):
        """Elementwise dist(us[i], vs[i])."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if not self.is_graph:
            self.counter.add(distance_evals=int(np.count_nonzero(us != vs)))
            return self.backing.pairwise(us, vs)
        out = np.zeros(len(us))
        off_diagonal = us != vs
        sources, inverse = np.unique(us[off_diagonal], return_inverse=True)
        if len(sources):
            rows = self._graph_rows(sources)
            out[off_diagonal] = rows[inverse, vs[off_diagonal]]
        return out

    def distances_to_point(self, z, ids):
        """Distances from a location outside V (Euclidean only)."""
        if not self.is_euclidean:
            raise UsageError(
                'queries outside V are only supported for coordinate '
                'point sets; pass a node id instead')
        ids = np.asarray(ids, dtype=np.int64)
        self.counter.add(distance_evals=len(ids))
        return self.backing.to_point(z, ids)

    def __repr__(self):
        return '<DistanceSpace {!r}>'.format(self.backing)


def distance(space, u, v):
    return space.distance(u, v)


def single_source(space, s):
    return space.single_source(s)
