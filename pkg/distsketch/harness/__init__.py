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
"""Seeded instance families and the Monte-Carlo trial runner."""

from distsketch.harness.instances import path_graph, star_graph, \
    clique_graph, random_geometric_graph, erdos_renyi_graph, \
    heavy_tail_points, uniform_cloud, make_instance, INSTANCE_KINDS
from distsketch.harness.trials import TrialConfig, ErrorReport, run_trials, \
    measure_pps_constant, measure_pair_constant, transposition_rate, \
    format_summary, TranspositionRate, VARIANCE_SLACK
