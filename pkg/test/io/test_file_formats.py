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

import io
import unittest

import numpy as np

from distsketch.common.errors import NegativeWeight, NotAMetric, ParseError
from distsketch.harness.instances import erdos_renyi_graph, uniform_cloud
from distsketch.io import CsvDictWriter, parse_edge_list, parse_points, \
    parse_sample, parse_signed_edge_list, serialize_graph, \
    serialize_points, serialize_sample, write_estimate_report
from distsketch.sampling import compute_coefficients, draw_sample
from distsketch.space import DistanceSpace, Graph, PointSet


class TestEdgeList(unittest.TestCase):
    def test_p3(self):
        self.assertEqual(parse_edge_list('0 1 1\n1 2 1'),
                         Graph(3, [(0, 1, 1), (1, 2, 1)]))

    def test_parallel_edges(self):
        g = parse_edge_list('0 1 2\n0 1 1\n')
        self.assertEqual(g.edges, [(0, 1, 1.0)])

    def test_negative_weight(self):
        with self.assertRaises(NegativeWeight) as cm:
            parse_edge_list('0 1 -3')
        self.assertEqual(cm.exception.line_no, 1)

    def test_header_and_comments(self):
        g = parse_edge_list('# a path with an isolated tail\n'
                            '5 2\n'
                            '0 1 1.5  # first\n'
                            '\n'
                            '1 2 2\n')
        self.assertEqual(g.n, 5)
        self.assertEqual(g.edges, [(0, 1, 1.5), (1, 2, 2.0)])

    def test_errors_carry_line_numbers(self):
        for text, line_no in (('0 1 1\n1 2\n', 2), ('0 1 x\n', 1),
                              ('0 1 1\n0 a 1\n', 2), ('3 1\n0 4 1\n', 1),
                              ('0 -1 2\n', 1)):
            with self.assertRaises(ParseError) as cm:
                parse_edge_list(text)
            self.assertEqual(cm.exception.line_no, line_no, msg=text)
        with self.assertRaises(ParseError):
            parse_edge_list('# nothing\n')

    def test_round_trip(self):
        g = erdos_renyi_graph(40, seed=3)
        self.assertEqual(parse_edge_list(serialize_graph(g)), g)
        lonely = Graph(4, [(0, 1, 0.1)])
        self.assertEqual(parse_edge_list(serialize_graph(lonely)), lonely)

    def test_signed(self):
        g = parse_signed_edge_list('0 1 -3\n1 2 2\n')
        self.assertEqual(g.M, 3)
        self.assertEqual(g.edges, [(0, 1, -3), (1, 2, 2)])
        self.assertEqual(parse_signed_edge_list('0 1 0\n').M, 1)
        self.assertEqual(parse_signed_edge_list('0 1 1\n', M=4).M, 4)
        with self.assertRaises(ParseError):
            parse_signed_edge_list('0 1 1.5\n')


class TestPointFile(unittest.TestCase):
    def test_csv(self):
        points = parse_points('0,0\n3,4\n')
        self.assertEqual(DistanceSpace(points).distance(0, 1), 5)

    def test_matrix(self):
        points = parse_points('matrix 2\n0 5\n5 0\n')
        self.assertFalse(points.is_euclidean)
        self.assertEqual(DistanceSpace(points).distance(0, 1), 5)

    def test_not_a_metric(self):
        with self.assertRaises(NotAMetric):
            parse_points('matrix 3\n0 1 10\n1 0 1\n10 1 0\n')

    def test_ragged(self):
        with self.assertRaises(ParseError) as cm:
            parse_points('0,0\n1,2,3\n')
        self.assertEqual(cm.exception.line_no, 2)
        with self.assertRaises(ParseError):
            parse_points('matrix 2\n0 5\n')
        with self.assertRaises(ParseError):
            parse_points('0,zero\n')

    def test_round_trip(self):
        cloud = uniform_cloud(25, seed=6)
        self.assertEqual(parse_points(serialize_points(cloud)), cloud)
        matrix = PointSet(matrix=[[0, 0.1, 0.3], [0.1, 0, 0.25],
                                  [0.3, 0.25, 0]])
        self.assertEqual(parse_points(serialize_points(matrix)), matrix)


class TestSampleFile(unittest.TestCase):
    def test_round_trip(self):
        space = DistanceSpace(uniform_cloud(60, seed=2))
        sample = draw_sample(compute_coefficients(space, [3]), 12.5, seed=8)
        text = serialize_sample(sample)
        self.assertTrue(text.startswith('sample 12.5 8 60\n'))
        self.assertEqual(parse_sample(text), sample)

    def test_bad_header(self):
        with self.assertRaises(ParseError):
            parse_sample('0 0.5\n')
        with self.assertRaises(ParseError):
            parse_sample('sample 3 1 4\n0 x\n')


class TestReportWriter(unittest.TestCase):
    def test_estimate_report(self):
        fout = io.StringIO()
        rows = write_estimate_report(fout, np.array([3.0, 2.0, 3.0]),
                                     np.array([2 / 3.0, 1.0, 2 / 3.0]),
                                     'exact')
        self.assertEqual(rows, 3)
        self.assertEqual(fout.getvalue().splitlines(), [
            'v,w_hat,cc_hat,method',
            '0,3.0,0.6666666666666666,exact',
            '1,2.0,1.0,exact',
            '2,3.0,0.6666666666666666,exact',
        ])

    def test_exact_columns(self):
        fout = io.StringIO()
        write_estimate_report(fout, np.array([4.0, 0.0]),
                              np.array([0.25, np.inf]), 'weighted',
                              exact_w=np.array([2.0, 2.0]))
        self.assertEqual(fout.getvalue().splitlines()[0],
                         'v,w_hat,cc_hat,method,w,cc')
        self.assertEqual(fout.getvalue().splitlines()[2],
                         '1,0.0,inf,weighted,2.0,0.5')

    def test_header_from_first_row(self):
        fout = io.StringIO()
        writer = CsvDictWriter(fout)
        writer.write({})
        writer.write({'aps_estimate': 4.0, 'k': 10})
        self.assertEqual(writer.write_raw_num(), 1)
        self.assertEqual(fout.getvalue(), 'aps_estimate,k\n4.0,10\n')


if __name__ == '__main__':
    unittest.main()
