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

import numpy as np

from distsketch.common.errors import BadAnchor, UsageError
from distsketch.common.seeding import derive_seed, make_rng
from distsketch.estimation.estimators import EstimateVector
from distsketch.sampling.coefficients import CoefficientVector, \
    compute_coefficients
from distsketch.sampling.order_statistics import draw_multiset
from distsketch.sampling.poisson import k_for_pairs
from distsketch.sampling.well_positioned import find_well_positioned, \
    find_well_positioned_relaxed


class RhoVector(object):
    """Pair-sampling marginal built from rough estimates n d(i,z) + W(z)."""

    def __init__(self, rho, anchor, w_rough):
        self.rho = rho
        self.anchor = int(anchor)
        self.w_rough = w_rough

    def __len__(self):
        return len(self.rho)


class PairSample(object):
    """k ordered pairs (i, j), each stored with p_ij = gamma_i rho_j."""

    def __init__(self, i, j, p, k, seed):
        self.i = i
        self.j = j
        self.p = p
        self.k = int(k)
        self.seed = seed

    @property
    def pairs(self):
        return list(zip(self.i.tolist(), self.j.tolist(), self.p.tolist()))

    def __len__(self):
        return len(self.i)


def aps_from_estimates(estimates):
    w_hat = estimates.w_hat if isinstance(estimates, EstimateVector) \
        else np.asarray(estimates, dtype=np.float64)
    return 0.5 * float(np.sum(w_hat))


def compute_rho(space, z):
    dv = space.single_source(z)
    w_rough = space.n * dv.d + dv.sum
    total = w_rough.sum()
    if total == 0:
        raise BadAnchor('all rough estimates are zero around anchor '
                        '{}; every element sits at one location'.format(z))
    return RhoVector(w_rough / total, z, w_rough)


def _as_distribution(values):
    if isinstance(values, CoefficientVector):
        return values.normalized()
    if isinstance(values, RhoVector):
        return values.rho
    return np.asarray(values, dtype=np.float64)


def sample_pairs(gamma, rho, k, seed):
    """Draws k i.i.d. pairs from the outer product of gamma and rho.

    Both marginals come back from draw_multiset sorted; shuffling the
    second one before zipping makes the k pairs independent.
    """
    k = int(k)
    if k < 1:
        raise UsageError('need at least one pair, got {}'.format(k))
    gamma = _as_distribution(gamma)
    rho = _as_distribution(rho)
    i = draw_multiset(gamma, k, derive_seed(seed, 0))
    j = draw_multiset(rho, k, derive_seed(seed, 1))
    j = make_rng(derive_seed(seed, 2)).permutation(j)
    return PairSample(i, j, gamma[i] * rho[j], k, seed)


def estimate_aps_pairs(space, pairs):
    """Sample average of dist(i,j)/p_ij, halved to count unordered pairs."""
    if len(pairs) == 0:
        raise UsageError('pair sample is empty')
    d = space.pairwise(pairs.i, pairs.j)
    return 0.5 * float(np.mean(d / pairs.p))


def pair_marginals(space, seed, anchor=None):
    """Coefficients from S0 = {anchor} and rho around the same anchor.

    The anchor comes from the relaxed search on point sets and the
    exact search on graphs unless given.
    """
    if anchor is None:
        if space.is_graph:
            anchor = find_well_positioned(space, seed)
        else:
            anchor = find_well_positioned_relaxed(space, seed)
    coeffs = compute_coefficients(space, [anchor])
    return coeffs, compute_rho(space, anchor)


def estimate_aps_metric(space, k=None, epsilon=None, seed=0, anchor=None):
    """Pair-sampling pipeline: anchor, gamma, rho, then k sampled pairs."""
    if k is None:
        if epsilon is None:
            raise UsageError('need k or epsilon')
        k = k_for_pairs(epsilon)
    coeffs, rho = pair_marginals(space, derive_seed(seed, 10), anchor)
    pairs = sample_pairs(coeffs, rho, k, derive_seed(seed, 11))
    estimate = estimate_aps_pairs(space, pairs)
    logging.info('Pair estimate of aps %f from %d pairs, anchor %d',
                 estimate, k, rho.anchor)
    return estimate, pairs
