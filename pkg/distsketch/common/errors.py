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
"""Exceptions raised by distsketch."""


class DistSketchError(Exception):
    pass


class UsageError(DistSketchError):
    """Invalid parameters passed by the caller."""


class DataError(DistSketchError):
    """The input data can not be processed."""


class ParseError(DataError):
    def __init__(self, line_no, message):
        if line_no is not None:
            message = 'line {}: {}'.format(line_no, message)
        super(ParseError, self).__init__(message)
        self.line_no = line_no


class NegativeWeight(ParseError):
    pass


class NotAMetric(DataError):
    pass


class DisconnectedGraph(DataError):
    pass


class UnreachablePair(DisconnectedGraph):
    def __init__(self, u, v):
        super(UnreachablePair, self).__init__(
            'no path between node {} and node {}'.format(u, v))
        self.u = u
        self.v = v


class BadDistribution(DataError):
    pass


class BadAnchor(DataError):
    pass


class DegenerateMetric(DataError):
    pass


class InstanceTooSmall(DataError):
    pass


class InvalidSignedGraph(DataError):
    pass
