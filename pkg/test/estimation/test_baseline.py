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

import unittest

import numpy as np

from distsketch.common.errors import UsageError
from distsketch.estimation import uniform_all_nodes, uniform_estimate_w, \
    uniform_median, uniform_sample_size
from distsketch.harness.instances import heavy_tail_points, path_graph, \
    random_geometric_graph, star_graph, uniform_cloud
from distsketch.harness.trials import transposition_rate
from distsketch.oracle import exact_w_all
from distsketch.space import DistanceSpace, PointSet


class TestUniformEstimate(unittest.TestCase):
    def test_full_sample(self):
        space = DistanceSpace(path_graph(3))
        self.assertEqual(uniform_estimate_w(space, [0, 1, 2], 0), 3)
        np.testing.assert_array_equal(
            uniform_all_nodes(space, [0, 1, 2]).w_hat, [3, 2, 3])
        self.assertEqual(uniform_all_nodes(space, [0]).method, 'uniform')

    def test_skewed_sample(self):
        space = DistanceSpace(path_graph(3))
        self.assertEqual(uniform_estimate_w(space, [0], 2), 6)

    def test_empty(self):
        with self.assertRaises(UsageError):
            uniform_estimate_w(DistanceSpace(path_graph(3)), [], 0)

    def test_misses_far_points(self):
        space = DistanceSpace(heavy_tail_points(200, seed=3))
        truth = exact_w_all(DistanceSpace(space.backing))[0]
        rng = np.random.default_rng(17)
        estimates = [uniform_estimate_w(
            space, rng.choice(200, size=15, replace=False), 0)
                     for _ in range(101)]
        self.assertLess(np.median(estimates), 0.5 * truth)


class TestUniformMedian(unittest.TestCase):
    def test_sample_size(self):
        self.assertEqual(uniform_sample_size(200, 0.25, 0.05), 200)
        self.assertEqual(uniform_sample_size(10 ** 9, 0.5, 0.5),
                         int(np.ceil(256 * np.log(2 * 10 ** 9))))
        with self.assertRaises(UsageError):
            uniform_sample_size(10, 0.0, 0.5)
        with self.assertRaises(UsageError):
            uniform_sample_size(10, 0.5, 1.0)

    def test_star(self):
        space = DistanceSpace(star_graph(4))
        self.assertEqual(uniform_median(space, 0.5, 0.05, seed=1), 0)

    def test_two_nodes(self):
        space = DistanceSpace(PointSet(coords=[[0.0], [2.0]]))
        self.assertIn(uniform_median(space, 0.5, 0.05, seed=1), (0, 1))

    def test_approximation(self):
        space = DistanceSpace(random_geometric_graph(200, seed=8))
        w = exact_w_all(DistanceSpace(space.backing))
        good = 0
        for seed in range(200):
            winner = uniform_median(space, 0.25, 0.05, seed=seed)
            if w[winner] <= 1.25 * w.min():
                good += 1
        self.assertGreaterEqual(good, 180)

    def test_sample_smaller_than_n(self):
        space = DistanceSpace(uniform_cloud(2000, seed=11))
        w = exact_w_all(DistanceSpace(space.backing))
        size = uniform_sample_size(2000, 0.9, 0.5)
        self.assertLess(size, 2000)
        for seed in range(5):
            before = space.counter.distance_evals
            winner = uniform_median(space, 0.9, 0.5, seed=seed)
            self.assertEqual(space.counter.distance_evals - before,
                             size * 1999)
            self.assertLessEqual(w[winner], 1.9 * w.min())

    def test_transposition_rate(self):
        space = DistanceSpace(random_geometric_graph(150, seed=2))
        epsilon = 0.25
        result = transposition_rate(space, epsilon, size=30, trials=200,
                                    seed=4)
        self.assertGreater(result.events, 0)
        self.assertLessEqual(result.rate, result.bound + 3 * result.sigma)


if __name__ == '__main__':
    unittest.main()
