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
"""Brute-force ground truth used by tests and the trial harness."""

from distsketch.oracle.exact import DistributionCheck, exact_distance_matrix, \
    exact_w_all, exact_aps, exact_gamma_bar, exact_quantile_distances, \
    min_median, classify_well_positioned, check_distance_bounds, \
    distance_bounds_hold, floyd_warshall_exact, clear_cache
