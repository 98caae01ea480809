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
"""Universal PPS coefficients, Poisson samples and sorted draws."""

from distsketch.sampling.well_positioned import QuantileRank, \
    median_distance, find_well_positioned, find_well_positioned_relaxed, \
    relaxed_budget, relaxed_quantile, resolve_rank, kth_smallest, \
    CANDIDATE_FACTOR, SAMPLE_FACTOR, RELAXED_FRACTION
from distsketch.sampling.coefficients import CoefficientVector, \
    BasePolicy, compute_coefficients, parse_base_policy, choose_base_set
from distsketch.sampling.poisson import WeightedSample, draw_sample, \
    inclusion_probabilities, k_for_cv, k_for_high_probability, k_for_pairs
from distsketch.sampling.order_statistics import sorted_uniform_draws, \
    draw_multiset
