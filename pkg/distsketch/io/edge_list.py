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

from distsketch.common.errors import NegativeWeight, ParseError
from distsketch.hardness.reduction import SignedGraph
from distsketch.space.graph import Graph


def _data_lines(text):
    """Yields (line number, tokens) for non-empty, non-comment lines."""
    for line_no, line in enumerate(text.splitlines(), 1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield line_no, line.split()


def _parse_triples(text, parse_weight):
    header = None
    triples = []
    for line_no, tokens in _data_lines(text):
        if not triples and header is None and len(tokens) == 2:
            try:
                header = (int(tokens[0]), int(tokens[1]), line_no)
            except ValueError:
                raise ParseError(line_no, 'bad header {!r}'.format(
                    ' '.join(tokens)))
            continue
        if len(tokens) != 3:
            raise ParseError(line_no, 'expected `u v w`, got {} fields'.format(
                len(tokens)))
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(line_no, 'node ids must be integers')
        if u < 0 or v < 0:
            raise ParseError(line_no, 'node ids must be nonnegative')
        triples.append((line_no, u, v, parse_weight(line_no, tokens[2])))

    max_id = max([max(u, v) for _, u, v, _ in triples], default=-1)
    if header is None:
        if not triples:
            raise ParseError(None, 'edge list is empty')
        return max_id + 1, triples
    n, m, line_no = header
    if max_id >= n:
        raise ParseError(line_no, 'header declares n={} but node {} '
                         'appears'.format(n, max_id))
    if m != len(triples):
        logging.warning('Edge list header declares m=%d, found %d edges',
                        m, len(triples))
    return n, triples


def _float_weight(line_no, token):
    try:
        w = float(token)
    except ValueError:
        raise ParseError(line_no, 'bad weight {!r}'.format(token))
    if w < 0:
        raise NegativeWeight(line_no, 'negative weight {}'.format(token))
    if w != w or w == float('inf'):
        raise ParseError(line_no, 'weight must be finite')
    return w


def _int_weight(line_no, token):
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, 'signed weights must be integers, '
                         'got {!r}'.format(token))


def parse_edge_list(text):
    """Parses `u v w` lines, with an optional leading `n m` header."""
    n, triples = _parse_triples(text, _float_weight)
    return Graph(n, [(u, v, w) for _, u, v, w in triples])


def serialize_graph(graph):
    lines = ['{} {}'.format(graph.n, graph.m)]
    lines.extend('{} {} {!r}'.format(u, v, w) for u, v, w in graph.edges)
    return '\n'.join(lines) + '\n'


def parse_signed_edge_list(text, M=None):
    """Integer-weighted edge list; M defaults to the largest |w| (min 1)."""
    n, triples = _parse_triples(text, _int_weight)
    if M is None:
        M = max([abs(w) for _, _, _, w in triples] + [1])
    return SignedGraph(n, [(u, v, w) for _, u, v, w in triples], M)
