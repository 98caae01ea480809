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

import pickle
import threading
import unittest

import numpy as np

from distsketch.common.errors import DisconnectedGraph, NegativeWeight, \
    NotAMetric, UnreachablePair, UsageError
from distsketch.common.seeding import derive_seed
from distsketch.harness.instances import erdos_renyi_graph, \
    random_geometric_graph
from distsketch.space import DistanceCounter, DistanceSpace, Graph, PointSet


def p3():
    return Graph(3, [(0, 1, 1), (1, 2, 1)])


class TestGraph(unittest.TestCase):
    def test_parallel_edges_keep_lightest(self):
        g = Graph(2, [(0, 1, 2), (1, 0, 1)])
        self.assertEqual(g.edges, [(0, 1, 1.0)])

    def test_self_loops_dropped(self):
        g = Graph(2, [(0, 0, 5), (0, 1, 1)])
        self.assertEqual(g.m, 1)

    def test_negative_weight(self):
        with self.assertRaises(NegativeWeight):
            Graph(2, [(0, 1, -3)])

    def test_zero_weight_edge_is_an_edge(self):
        space = DistanceSpace(Graph(3, [(0, 1, 0), (1, 2, 2)]))
        np.testing.assert_array_equal(space.single_source(0).d, [0, 0, 2])

    def test_equality(self):
        self.assertEqual(p3(), Graph(3, [(1, 2, 1), (0, 1, 1), (0, 1, 4)]))
        self.assertNotEqual(p3(), Graph(3, [(0, 1, 1), (0, 2, 1)]))


class TestGraphSpace(unittest.TestCase):
    def test_p3_single_source(self):
        space = DistanceSpace(p3())
        dv = space.single_source(0)
        np.testing.assert_array_equal(dv.d, [0, 1, 2])
        self.assertEqual(dv.sum, 3)
        self.assertEqual(space.counter.sssp_calls, 1)
        self.assertEqual(space.single_source(1).sum, 2)

    def test_star(self):
        space = DistanceSpace(Graph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]))
        self.assertEqual(space.single_source(1).sum, 5)
        self.assertEqual(space.distance(1, 3), 2)

    def test_distance_is_symmetric(self):
        space = DistanceSpace(Graph(4, [(0, 1, 1.5), (1, 2, 2.25),
                                        (2, 3, 0.5), (0, 3, 7)]))
        for u in range(4):
            for v in range(4):
                self.assertEqual(space.distance(u, v), space.distance(v, u))
        self.assertEqual(space.distance(0, 3), 4.25)

    def test_disconnected(self):
        space = DistanceSpace(Graph(3, [(0, 1, 1)]))
        with self.assertRaises(DisconnectedGraph):
            space.single_source(0)
        with self.assertRaises(UnreachablePair):
            space.distance(0, 2)
        self.assertEqual(space.distance(0, 1), 1)

    def test_multi_source_counts_each_source(self):
        space = DistanceSpace(p3())
        rows = space.multi_source([0, 2])
        np.testing.assert_array_equal(rows, [[0, 1, 2], [2, 1, 0]])
        self.assertEqual(space.counter.sssp_calls, 2)

    def test_bad_node(self):
        with self.assertRaises(UsageError):
            DistanceSpace(p3()).single_source(3)

    def test_fingerprint(self):
        self.assertEqual(DistanceSpace(p3()).fingerprint,
                         DistanceSpace(p3()).fingerprint)
        other = DistanceSpace(Graph(3, [(0, 1, 1), (1, 2, 2)]))
        self.assertNotEqual(DistanceSpace(p3()).fingerprint,
                            other.fingerprint)


class TestPointSpace(unittest.TestCase):
    def test_euclidean_pair(self):
        space = DistanceSpace(PointSet(coords=[[0, 0], [3, 4]]))
        self.assertEqual(space.distance(0, 1), 5)
        self.assertEqual(space.counter.distance_evals, 1)
        self.assertEqual(space.distance(1, 1), 0)
        self.assertEqual(space.counter.distance_evals, 1)

    def test_single_source_counts_n_minus_one(self):
        rng = np.random.default_rng(3)
        space = DistanceSpace(PointSet(coords=rng.random((10, 3))))
        space.single_source(4)
        self.assertEqual(space.counter.distance_evals, 9)
        space.multi_source([0, 1])
        self.assertEqual(space.counter.distance_evals, 27)

    def test_pairwise_skips_diagonal(self):
        space = DistanceSpace(PointSet(coords=[[0.0], [1.0], [3.0]]))
        d = space.pairwise([0, 1, 2], [2, 1, 0])
        np.testing.assert_array_equal(d, [3, 0, 3])
        self.assertEqual(space.counter.distance_evals, 2)

    def test_matrix_mode(self):
        space = DistanceSpace(PointSet(matrix=[[0, 5], [5, 0]]))
        self.assertFalse(space.is_euclidean)
        self.assertEqual(space.single_source(0).sum, 5)
        with self.assertRaises(UsageError):
            space.distances_to_point([0.0], [0, 1])

    def test_triangle_violation(self):
        with self.assertRaises(NotAMetric):
            PointSet(matrix=[[0, 1, 10], [1, 0, 1], [10, 1, 0]])

    def test_asymmetric_matrix(self):
        with self.assertRaises(NotAMetric):
            PointSet(matrix=[[0, 1], [2, 0]])

    def test_duplicate_points_allowed(self):
        space = DistanceSpace(PointSet(coords=[[1, 1], [1, 1], [4, 5]]))
        self.assertEqual(space.distance(0, 1), 0)
        self.assertEqual(space.single_source(0).sum, 5)

    def test_query_outside(self):
        space = DistanceSpace(PointSet(coords=[[0, 0], [6, 8]]))
        d = space.distances_to_point([3, 4], [0, 1])
        np.testing.assert_allclose(d, [5, 5])
        self.assertEqual(space.counter.distance_evals, 2)


def random_graph_spaces(count=12):
    """Connected erdos-renyi and geometric graphs, 20 <= n <= 80."""
    rng = np.random.default_rng(1105)
    makers = [erdos_renyi_graph, random_geometric_graph]
    for i in range(count):
        n = int(rng.integers(20, 81))
        yield DistanceSpace(makers[i % 2](n, seed=derive_seed(19, i)))


class TestRandomGraphs(unittest.TestCase):
    def test_triangle_inequality(self):
        rng = np.random.default_rng(8)
        for space in random_graph_spaces():
            for u, v, w in rng.integers(0, space.n, size=(300, 3)):
                self.assertLessEqual(
                    space.distance(u, w),
                    space.distance(u, v) + space.distance(v, w) + 1e-9)

    def test_single_source_matches_distance(self):
        rng = np.random.default_rng(9)
        for space in random_graph_spaces():
            for s in rng.choice(space.n, size=3, replace=False):
                row = space.single_source(s).d
                for v in range(space.n):
                    self.assertEqual(row[v], space.distance(s, v))
                self.assertEqual(row[s], 0)

    def test_shared_between_threads(self):
        space = DistanceSpace(erdos_renyi_graph(30, seed=4))
        expected = DistanceSpace(space.backing).multi_source(range(30))
        results, errors = [None] * 8, []

        def work(i):
            try:
                out = np.zeros((30, 30))
                for u in range(30):
                    for v in range(30):
                        out[u, v] = space.distance((u + i) % 30, v)
                results[i] = np.roll(out, i, axis=0)
            except Exception as e:  # pylint: disable=broad-except
                errors.append(e)

        threads = [threading.Thread(target=work, args=(i,))
                   for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        self.assertEqual(errors, [])
        for out in results:
            np.testing.assert_array_equal(out, expected)
        self.assertEqual(space.counter.sssp_calls, 30)


class TestDistanceCounter(unittest.TestCase):
    def test_snapshot_and_delta(self):
        counter = DistanceCounter()
        counter.add(distance_evals=3)
        since = counter.snapshot()
        counter.add(distance_evals=2, sssp_calls=1)
        self.assertEqual(counter.delta(since), (2, 1))
        self.assertEqual(counter.snapshot(), (5, 1))

    def test_pickle(self):
        counter = DistanceCounter()
        counter.add(7, 2)
        restored = pickle.loads(pickle.dumps(counter))
        self.assertEqual(restored.snapshot(), (7, 2))
        restored.add(1)
        self.assertEqual(restored.distance_evals, 8)


if __name__ == '__main__':
    unittest.main()
