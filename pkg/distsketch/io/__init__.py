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
"""Edge lists, point files, sample files and report CSV."""

from distsketch.io.edge_list import parse_edge_list, serialize_graph, \
    parse_signed_edge_list
from distsketch.io.point_file import parse_points, serialize_points
from distsketch.io.sample_file import serialize_sample, parse_sample
from distsketch.io.report_writer import CsvDictWriter, format_real, \
    write_estimate_report
