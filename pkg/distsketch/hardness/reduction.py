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

import itertools
import logging

import numpy as np

from distsketch.common.errors import InvalidSignedGraph
from distsketch.common.seeding import make_rng
from distsketch.oracle.exact import floyd_warshall_exact
from distsketch.space.graph import Graph


class SignedGraph(object):
    """Undirected graph with integer edge weights in [-M, M]."""

    def __init__(self, n, edges, M):
        n, M = int(n), int(M)
        if n < 1:
            raise InvalidSignedGraph('graph must have at least one node')
        if M < 1:
            raise InvalidSignedGraph('weight bound M must be >= 1')
        self.n = n
        self.M = M
        self._weights = {}
        for u, v, w in edges:
            u, v = int(u), int(v)
            if w != int(w):
                raise InvalidSignedGraph(
                    'edge ({}, {}) has non-integer weight {}'.format(u, v, w))
            w = int(w)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSignedGraph(
                    'edge ({}, {}) out of range for n={}'.format(u, v, n))
            if u == v:
                raise InvalidSignedGraph('self-loop at node {}'.format(u))
            if abs(w) > M:
                raise InvalidSignedGraph(
                    'edge ({}, {}) weight {} exceeds M={}'.format(u, v, w, M))
            key = (min(u, v), max(u, v))
            if key in self._weights:
                raise InvalidSignedGraph(
                    'duplicate edge ({}, {})'.format(*key))
            self._weights[key] = w

    @property
    def edges(self):
        return [(u, v, w) for (u, v), w in sorted(self._weights.items())]

    def weight(self, u, v):
        """Edge weight, or None when u and v are not adjacent."""
        return self._weights.get((min(u, v), max(u, v)))

    def __eq__(self, other):
        return isinstance(other, SignedGraph) and self.n == other.n and \
            self.M == other.M and self._weights == other._weights

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<SignedGraph n={} m={} M={}>'.format(
            self.n, len(self._weights), self.M)


class ReducedInstance(object):
    """Complete graph on three copies of V with doubled integer lengths.

    Copy c in {0, 1, 2} of node u is node c*n + u. `doubled` holds
    2 w'(a, b) so that the default length 3N/2 stays an integer.
    """

    def __init__(self, n, N, doubled):
        self.n = n
        self.N = N
        self.doubled = doubled

    @property
    def size(self):
        return 3 * self.n

    def length(self, a, b):
        return self.doubled[a, b] / 2.0

    def doubled_total(self):
        """2 * sum of w' over the unordered edges of the instance."""
        return int(np.triu(self.doubled, 1).sum())

    def to_graph(self):
        iu, iv = np.triu_indices(self.size, 1)
        return Graph(self.size, zip(iu.tolist(), iv.tolist(),
                                    (self.doubled[iu, iv] / 2.0).tolist()))


def reduce(g):
    """Builds the complete 3n-node instance for negative-triangle search.

    With N = 4M, edge (u, v, w) sets w'(u1, v2) = w'(u2, v3) = N + w and
    w'(u3, v1) = 2N - w in both orientations; every other pair is 3N/2.
    """
    n = g.n
    N = 4 * g.M
    size = 3 * n
    doubled = np.full((size, size), 3 * N, dtype=np.int64)
    np.fill_diagonal(doubled, 0)
    for u, v, w in g.edges:
        for a, b in ((u, v), (v, u)):
            for src, dst, length in ((0, 1, N + w), (1, 2, N + w),
                                     (2, 0, 2 * N - w)):
                x, y = src * n + a, dst * n + b
                doubled[x, y] = doubled[y, x] = 2 * length
    return ReducedInstance(n, N, doubled)


def detect_negative_triangle_via_aps(g):
    """True iff some edge of the reduced instance is not a shortest path.

    Shortest-path distances never exceed edge lengths, so the all-pairs
    sum drops below the edge-length total exactly when a negative
    triangle exists.
    """
    reduced = reduce(g)
    shortest = floyd_warshall_exact(reduced.doubled)
    aps_doubled = int(np.triu(shortest, 1).sum())
    found = aps_doubled < reduced.doubled_total()
    logging.debug('Reduced instance of %d nodes: 2*aps=%d, 2*total=%d',
                  reduced.size, aps_doubled, reduced.doubled_total())
    return found


def has_negative_triangle_bruteforce(g):
    for a, b, c in itertools.combinations(range(g.n), 3):
        wab, wbc, wac = g.weight(a, b), g.weight(b, c), g.weight(a, c)
        if wab is None or wbc is None or wac is None:
            continue
        if wab + wbc + wac < 0:
            return True
    return False


def random_signed_graph(n, M, density, seed):
    """Each pair becomes an edge with probability `density`, weight U{-M..M}."""
    rng = make_rng(seed)
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < density:
            edges.append((u, v, int(rng.integers(-M, M + 1))))
    return SignedGraph(n, edges, M)
