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

import networkx as nx
import numpy as np

from distsketch.common.errors import DisconnectedGraph, UsageError
from distsketch.common.seeding import derive_seed, make_rng
from distsketch.space.distance_space import DistanceSpace
from distsketch.space.graph import Graph
from distsketch.space.points import PointSet

MAX_ATTEMPTS = 100
RADIUS_GROWTH = 1.25


def _to_graph(nx_graph, weights):
    edges = [(u, v, w) for (u, v), w in zip(nx_graph.edges(), weights)]
    return Graph(nx_graph.number_of_nodes(), edges)


def path_graph(n, weight=1.0):
    g = nx.path_graph(n)
    return _to_graph(g, [weight] * g.number_of_edges())


def star_graph(n, weight=1.0):
    """Node 0 is the center of n - 1 spokes."""
    g = nx.star_graph(n - 1)
    return _to_graph(g, [weight] * g.number_of_edges())


def clique_graph(n, seed=None, low=1.0, high=2.0):
    g = nx.complete_graph(n)
    if seed is None:
        return _to_graph(g, [1.0] * g.number_of_edges())
    weights = make_rng(seed).uniform(low, high, size=g.number_of_edges())
    return _to_graph(g, weights.tolist())


def random_geometric_graph(n, seed, radius=None):
    """Points in the unit square joined within `radius`, Euclidean lengths.

    The radius grows until the graph is connected; positions depend on
    the seed only.
    """
    if radius is None:
        radius = 1.5 * math.sqrt(math.log(max(n, 2)) / (math.pi * n))
    for _ in range(MAX_ATTEMPTS):
        g = nx.random_geometric_graph(n, radius, seed=seed)
        if nx.is_connected(g):
            pos = nx.get_node_attributes(g, 'pos')
            weights = [math.dist(pos[u], pos[v]) for u, v in g.edges()]
            logging.debug('Random geometric graph n=%d radius=%f m=%d',
                          n, radius, g.number_of_edges())
            return _to_graph(g, weights)
        radius *= RADIUS_GROWTH
    raise DisconnectedGraph(
        'no connected geometric graph after {} attempts'.format(MAX_ATTEMPTS))


def erdos_renyi_graph(n, seed, p=None, low=1.0, high=2.0):
    """G(n, p) with U[low, high] lengths, resampled until connected."""
    if p is None:
        p = min(1.0, 2.0 * math.log(max(n, 2)) / n)
    for attempt in range(MAX_ATTEMPTS):
        g = nx.gnp_random_graph(n, p, seed=derive_seed(seed, attempt))
        if n == 1 or nx.is_connected(g):
            rng = make_rng(derive_seed(seed, attempt, 1))
            weights = rng.uniform(low, high, size=g.number_of_edges())
            return _to_graph(g, weights.tolist())
    raise DisconnectedGraph(
        'no connected G({}, {}) after {} attempts'.format(n, p, MAX_ATTEMPTS))


def heavy_tail_points(n, seed, outliers=1, distance=1000.0, spread=1.0):
    """A tight cluster in [0, spread]^2 plus far outliers at `distance`."""
    if not 0 < outliers < n:
        raise UsageError('need between 1 and n - 1 outliers')
    rng = make_rng(seed)
    cluster = rng.uniform(0.0, spread, size=(n - outliers, 2))
    angles = rng.uniform(0.0, 2 * math.pi, size=outliers)
    far = distance * np.column_stack([np.cos(angles), np.sin(angles)])
    return PointSet(coords=np.vstack([cluster, far]))


def uniform_cloud(n, seed, dim=2):
    return PointSet(coords=make_rng(seed).random((n, dim)))


INSTANCE_KINDS = {
    'path': lambda n, seed, **kw: path_graph(n, **kw),
    'star': lambda n, seed, **kw: star_graph(n, **kw),
    'clique': clique_graph,
    'geometric': random_geometric_graph,
    'erdos-renyi': erdos_renyi_graph,
    'heavy-tail': heavy_tail_points,
    'cloud': uniform_cloud,
}


def make_instance(name, n, seed, **params):
    """Builds a named instance family member wrapped in a DistanceSpace."""
    if name not in INSTANCE_KINDS:
        raise UsageError('unknown instance {!r}, expected one of {}'.format(
            name, ', '.join(sorted(INSTANCE_KINDS))))
    if n < 1:
        raise UsageError('instance size must be positive')
    return DistanceSpace(INSTANCE_KINDS[name](n, seed, **params))
