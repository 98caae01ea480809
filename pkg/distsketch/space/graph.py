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

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from distsketch.common.errors import DataError, NegativeWeight


class Graph(object):
    """Undirected graph with nonnegative edge lengths.

    Parallel edges collapse to the lightest one and self-loops are
    dropped, so every edge is stored once with u < v.
    """

    def __init__(self, n, edges):
        if n < 1:
            raise DataError('graph must have at least one node')
        self.n = int(n)
        merged = {}
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DataError(
                    'edge ({}, {}) out of range for n={}'.format(u, v, n))
            if w < 0 or np.isnan(w):
                raise NegativeWeight(
                    None, 'edge ({}, {}) has weight {}'.format(u, v, w))
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key not in merged or w < merged[key]:
                merged[key] = w

        keys = sorted(merged)
        self._u = np.asarray([k[0] for k in keys], dtype=np.int64)
        self._v = np.asarray([k[1] for k in keys], dtype=np.int64)
        self._w = np.asarray([merged[k] for k in keys], dtype=np.float64)
        # explicit zeros stay in the csr structure and count as edges
        self._adjacency = sparse.csr_matrix(
            (self._w, (self._u, self._v)), shape=(self.n, self.n))
        logging.debug('Built graph with %d nodes and %d edges',
                      self.n, len(keys))

    @property
    def m(self):
        return len(self._w)

    @property
    def edges(self):
        return list(zip(self._u.tolist(), self._v.tolist(), self._w.tolist()))

    def shortest_paths(self, sources):
        """Distance rows from every source, inf where unreachable."""
        sources = np.atleast_1d(np.asarray(sources, dtype=np.int64))
        if len(sources) == 0:
            return np.zeros((0, self.n))
        return csgraph.dijkstra(
            self._adjacency, directed=False, indices=sources)

    def fingerprint_bytes(self):
        return b'graph' + np.int64(self.n).tobytes() + self._u.tobytes() \
            + self._v.tobytes() + self._w.tobytes()

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and \
            self.edges == other.edges

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<Graph n={} m={}>'.format(self.n, self.m)
