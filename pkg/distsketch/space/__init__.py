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
"""Graphs and metric point sets behind one distance interface."""

from distsketch.space.counter import DistanceCounter, CounterSnapshot
from distsketch.space.graph import Graph
from distsketch.space.points import PointSet, validate_metric
from distsketch.space.distance_space import DistanceSpace, DistanceVector, \
    distance, single_source
