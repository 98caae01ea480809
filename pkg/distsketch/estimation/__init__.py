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
"""Inverse-probability estimators, all-pairs sums and the uniform baseline."""

from distsketch.estimation.estimators import EstimateVector, \
    CentralityVector, estimate_point, estimate_points, estimate_all_nodes, \
    closeness, approx_median
from distsketch.estimation.apsum import RhoVector, PairSample, \
    aps_from_estimates, compute_rho, sample_pairs, estimate_aps_pairs, \
    pair_marginals, estimate_aps_metric
from distsketch.estimation.baseline import uniform_estimate_w, sample_sums, \
    uniform_all_nodes, uniform_sample_size, uniform_median
