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

from distsketch.common.errors import InvalidSignedGraph
from distsketch.common.seeding import derive_seed, make_rng
from distsketch.hardness import SignedGraph, detect_negative_triangle_via_aps, \
    has_negative_triangle_bruteforce, random_signed_graph, reduce


def triangle(w):
    return SignedGraph(3, [(0, 1, w), (1, 2, w), (0, 2, w)], M=abs(w))


class TestSignedGraph(unittest.TestCase):
    def test_invalid(self):
        with self.assertRaises(InvalidSignedGraph):
            SignedGraph(3, [(0, 0, 1)], M=1)
        with self.assertRaises(InvalidSignedGraph):
            SignedGraph(3, [(0, 1, 1), (1, 0, -1)], M=1)
        with self.assertRaises(InvalidSignedGraph):
            SignedGraph(3, [(0, 1, 3)], M=2)
        with self.assertRaises(InvalidSignedGraph):
            SignedGraph(3, [(0, 1, 0.5)], M=2)
        with self.assertRaises(InvalidSignedGraph):
            SignedGraph(3, [], M=0)

    def test_weight_lookup(self):
        g = SignedGraph(3, [(2, 0, -1)], M=1)
        self.assertEqual(g.weight(0, 2), -1)
        self.assertIsNone(g.weight(0, 1))
        self.assertEqual(g.edges, [(0, 2, -1)])


class TestReduce(unittest.TestCase):
    def test_triangle_lengths(self):
        reduced = reduce(triangle(1))
        self.assertEqual(reduced.N, 4)
        self.assertEqual(reduced.size, 9)
        n = 3
        self.assertEqual(reduced.length(0, n + 1), 5)
        self.assertEqual(reduced.length(1, n + 0), 5)
        self.assertEqual(reduced.length(n + 0, 2 * n + 1), 5)
        self.assertEqual(reduced.length(2 * n + 0, 1), 7)
        self.assertEqual(reduced.length(2 * n + 2, 0), 7)
        self.assertEqual(reduced.length(0, 1), 6)
        self.assertEqual(reduced.length(0, n + 0), 6)
        self.assertEqual(reduced.length(0, 0), 0)

    def test_single_edge(self):
        reduced = reduce(SignedGraph(2, [(0, 1, -2)], M=2))
        self.assertEqual(reduced.size, 6)
        self.assertEqual(reduced.length(0, 3), 6)
        self.assertEqual(reduced.length(2, 5), 6)
        self.assertEqual(reduced.length(4, 1), 18)
        self.assertEqual(reduced.length(0, 2), 12)

    def test_empty_edge_set(self):
        reduced = reduce(SignedGraph(4, [], M=3))
        off_diagonal = ~np.eye(12, dtype=bool)
        self.assertTrue(np.all(reduced.doubled[off_diagonal] == 3 * 12))
        self.assertEqual(reduced.to_graph().m, 66)

    def test_positive_lengths(self):
        g = random_signed_graph(8, 5, 1.0, seed=2)
        reduced = reduce(g)
        off_diagonal = ~np.eye(reduced.size, dtype=bool)
        self.assertTrue(np.all(reduced.doubled[off_diagonal] >= 2 * 3 * g.M))
        np.testing.assert_array_equal(reduced.doubled, reduced.doubled.T)


class TestDetection(unittest.TestCase):
    def test_triangles(self):
        self.assertTrue(detect_negative_triangle_via_aps(triangle(-1)))
        self.assertFalse(detect_negative_triangle_via_aps(triangle(1)))
        self.assertTrue(has_negative_triangle_bruteforce(triangle(-1)))
        self.assertFalse(has_negative_triangle_bruteforce(triangle(1)))

    def test_triangle_free(self):
        cycle = SignedGraph(4, [(0, 1, -5), (1, 2, -5), (2, 3, -5),
                                (3, 0, -5)], M=5)
        self.assertFalse(detect_negative_triangle_via_aps(cycle))
        self.assertFalse(has_negative_triangle_bruteforce(cycle))
        path = SignedGraph(3, [(0, 1, -1), (1, 2, -1)], M=1)
        self.assertFalse(has_negative_triangle_bruteforce(path))
        self.assertFalse(detect_negative_triangle_via_aps(path))

    def test_zero_sum_is_not_negative(self):
        g = SignedGraph(3, [(0, 1, 2), (1, 2, -1), (0, 2, -1)], M=2)
        self.assertFalse(has_negative_triangle_bruteforce(g))
        self.assertFalse(detect_negative_triangle_via_aps(g))

    def test_matches_bruteforce(self):
        rng = make_rng(2021)
        outcomes = set()
        for i in range(500):
            n = int(rng.integers(3, 21))
            M = int(rng.integers(1, 11))
            density = (0.3, 0.7, 1.0)[i % 3]
            g = random_signed_graph(n, M, density, seed=derive_seed(5, i))
            expected = has_negative_triangle_bruteforce(g)
            self.assertEqual(detect_negative_triangle_via_aps(g), expected,
                             msg=repr(g))
            outcomes.add(expected)
        self.assertEqual(outcomes, {True, False})


if __name__ == '__main__':
    unittest.main()
