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

import csv

import numpy as np

from distsketch.common.errors import ParseError
from distsketch.space.points import PointSet


def _parse_reals(line_no, tokens):
    try:
        return [float(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, 'expected real numbers')


def _parse_matrix(lines, header_no, header):
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(header_no, 'matrix header must be `matrix n`')
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(header_no, 'bad matrix size {!r}'.format(parts[1]))
    if n < 1:
        raise ParseError(header_no, 'matrix size must be positive')
    if len(lines) != n:
        raise ParseError(header_no, 'expected {} matrix rows, got {}'.format(
            n, len(lines)))
    rows = []
    for line_no, line in lines:
        row = _parse_reals(line_no, line.replace(',', ' ').split())
        if len(row) != n:
            raise ParseError(line_no, 'expected {} entries, got {}'.format(
                n, len(row)))
        rows.append(row)
    return PointSet(matrix=np.asarray(rows))


def parse_points(text):
    """CSV coordinates, or `matrix n` followed by n rows of n reals."""
    lines = []
    for line_no, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if line:
            lines.append((line_no, line))
    if not lines:
        raise ParseError(None, 'point file is empty')
    if lines[0][1].startswith('matrix'):
        return _parse_matrix(lines[1:], lines[0][0], lines[0][1])

    rows = []
    for (line_no, _), tokens in zip(lines,
                                    csv.reader(line for _, line in lines)):
        row = _parse_reals(line_no, [t.strip() for t in tokens])
        if rows and len(row) != len(rows[0]):
            raise ParseError(line_no, 'expected {} coordinates, got {}'.format(
                len(rows[0]), len(row)))
        rows.append(row)
    return PointSet(coords=np.asarray(rows))


def serialize_points(points):
    if points.is_euclidean:
        return ''.join(','.join(repr(x) for x in row) + '\n'
                       for row in points.coords.tolist())
    lines = ['matrix {}'.format(points.n)]
    lines.extend(' '.join(repr(x) for x in row)
                 for row in points.matrix.tolist())
    return '\n'.join(lines) + '\n'
