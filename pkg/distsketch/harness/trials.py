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

import configparser
import logging
import math
import multiprocessing as mp
from collections import namedtuple

import numpy as np
from prettytable import PrettyTable

from distsketch.common import metrics
from distsketch.common.errors import DegenerateMetric, UsageError
from distsketch.common.seeding import derive_seed, make_rng
from distsketch.estimation.apsum import estimate_aps_metric, pair_marginals
from distsketch.estimation.baseline import uniform_all_nodes, \
    uniform_estimate_w
from distsketch.estimation.estimators import estimate_all_nodes, \
    estimate_points
from distsketch.harness.instances import make_instance
from distsketch.oracle.exact import exact_aps, exact_distance_matrix, \
    exact_w_all
from distsketch.sampling.coefficients import CoefficientVector, \
    choose_base_set, compute_coefficients, parse_base_policy
from distsketch.sampling.poisson import draw_sample, k_for_cv, k_for_pairs
from distsketch.space.counter import CounterSnapshot
from distsketch.space.distance_space import DistanceSpace

VARIANCE_SLACK = 1.25
TRIAL_METHODS = ('weighted', 'uniform', 'pairs')
CONFIG_SECTION = 'trial'

# seed streams kept apart from the per-trial counters 0..trials-1
PROBE_STREAM = 1 << 40
BASE_STREAM = (1 << 40) + 1

TranspositionRate = namedtuple('TranspositionRate',
                               ['rate', 'bound', 'sigma', 'events'])


def _parse_bool(text):
    if isinstance(text, bool):
        return text
    lowered = str(text).strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise UsageError('expected a boolean, got {!r}'.format(text))


class TrialConfig(object):
    """One Monte-Carlo experiment: an instance, an estimator, a budget."""

    _fields = {
        'instance': str, 'n': int, 'method': str, 'k': float,
        'epsilon': float, 'base': str, 'trials': int, 'seed': int,
        'instance_seed': int, 'probes': int, 'resample_base': _parse_bool,
        'num_parallel': int,
    }

    def __init__(self, instance='geometric', n=200, method='weighted',
                 k=None, epsilon=None, base='uniform:2', trials=100, seed=0,
                 instance_seed=None, probes=0, resample_base=True,
                 num_parallel=1):
        if method not in TRIAL_METHODS:
            raise UsageError('unknown method {!r}, expected one of {}'.format(
                method, ', '.join(TRIAL_METHODS)))
        if int(trials) < 1:
            raise UsageError('trials must be >= 1')
        if k is None and epsilon is None:
            raise UsageError('need k or epsilon')
        if k is not None and not k > 0:
            raise UsageError('k must be positive')
        parse_base_policy(base)
        self.instance = instance
        self.n = int(n)
        self.method = method
        self.k = k
        self.epsilon = epsilon
        self.base = base
        self.trials = int(trials)
        self.seed = int(seed)
        self.instance_seed = self.seed if instance_seed is None \
            else int(instance_seed)
        self.probes = int(probes)
        self.resample_base = resample_base
        self.num_parallel = int(num_parallel)

    def sample_size(self):
        if self.k is not None:
            return self.k
        if self.method == 'pairs':
            return k_for_pairs(self.epsilon)
        return k_for_cv(self.epsilon)

    def build_space(self):
        return make_instance(self.instance, self.n, self.instance_seed)

    @classmethod
    def from_mapping(cls, mapping):
        kwargs = {}
        for key, value in mapping.items():
            key = key.strip().replace('-', '_')
            if key not in cls._fields:
                raise UsageError('unknown config key {!r}'.format(key))
            try:
                kwargs[key] = cls._fields[key](value)
            except ValueError:
                raise UsageError('bad value {!r} for {}'.format(value, key))
        return cls(**kwargs)

    @classmethod
    def from_text(cls, text):
        """Parses a flat key=value file; `#` starts a comment."""
        parser = configparser.ConfigParser(
            delimiters=('=',), comment_prefixes=('#',))
        try:
            parser.read_string('[{}]\n{}'.format(CONFIG_SECTION, text))
        except configparser.Error as e:
            raise UsageError('bad config: {}'.format(e))
        return cls.from_mapping(dict(parser.items(CONFIG_SECTION)))

    @classmethod
    def from_file(cls, path):
        with open(path) as fin:
            return cls.from_text(fin.read())

    def __repr__(self):
        return ('TrialConfig(instance={!r}, n={}, method={!r}, k={}, '
                'epsilon={}, base={!r}, trials={}, seed={})').format(
                    self.instance, self.n, self.method, self.k,
                    self.epsilon, self.base, self.trials, self.seed)


class ErrorReport(object):
    """Per-target Monte-Carlo statistics against exact truth.

    `estimates` is a trials x targets matrix; for the pairs method the
    single target is aps(V).
    """

    def __init__(self, method, targets, truth, estimates, distance_evals,
                 sssp_calls, pps_constant=None):
        self.method = method
        self.targets = list(targets)
        self.truth = np.asarray(truth, dtype=np.float64)
        self.estimates = np.asarray(estimates, dtype=np.float64)
        self.distance_evals = int(distance_evals)
        self.sssp_calls = int(sssp_calls)
        self.pps_constant = pps_constant

        self.means = self.estimates.mean(axis=0)
        if self.trials > 1:
            self.variances = self.estimates.var(axis=0, ddof=1)
        else:
            self.variances = np.zeros(len(self.targets))
        deviation = self.estimates - self.truth[None, :]
        rmse = np.sqrt(np.mean(deviation ** 2, axis=0))
        self.nrmse = _relative(rmse, self.truth)
        self.relative_errors = _relative(np.abs(deviation), self.truth)
        self.max_rel_error = float(self.relative_errors.max())

    @property
    def trials(self):
        return self.estimates.shape[0]

    def exceed_fraction(self, threshold):
        """Share of (trial, target) pairs with relative error > threshold."""
        return float(np.mean(self.relative_errors > threshold))

    def to_rows(self):
        rows = []
        for i, target in enumerate(self.targets):
            rows.append({
                'target': target,
                'truth': float(self.truth[i]),
                'mean': float(self.means[i]),
                'variance': float(self.variances[i]),
                'nrmse': float(self.nrmse[i]),
            })
        return rows


def _relative(values, truth):
    out = np.where(values == 0, 0.0, np.inf)
    out = np.broadcast_to(out, np.broadcast(values, truth).shape).copy()
    positive = np.broadcast_to(truth > 0, out.shape)
    np.divide(values, truth, out=out, where=positive)
    return out


def measure_pps_constant(coeffs, space):
    """min over dist(z, v) > 0 of gamma_v W(z) / dist(z, v)."""
    gamma = coeffs.gamma if isinstance(coeffs, CoefficientVector) \
        else np.asarray(coeffs, dtype=np.float64)
    matrix = exact_distance_matrix(space)
    positive = matrix > 0
    if not positive.any():
        raise DegenerateMetric('all distances are zero')
    w = matrix.sum(axis=1)
    ratio = gamma[None, :] * w[:, None] / np.where(positive, matrix, 1.0)
    return float(ratio[positive].min())


def measure_pair_constant(gamma, rho, space):
    """min over dist(i, j) > 0 of gamma_i rho_j 2 aps(V) / dist(i, j)."""
    gamma = gamma.normalized() if isinstance(gamma, CoefficientVector) \
        else np.asarray(gamma, dtype=np.float64)
    rho = getattr(rho, 'rho', rho)
    matrix = exact_distance_matrix(space)
    positive = matrix > 0
    if not positive.any():
        raise DegenerateMetric('all distances are zero')
    total = matrix.sum()
    p = np.outer(gamma, rho)
    return float((p[positive] * total / matrix[positive]).min())


def _trial_estimates(space, config, t, targets, fixed_base):
    k = config.sample_size()
    trial_seed = derive_seed(config.seed, t)
    if config.method == 'pairs':
        estimate, _ = estimate_aps_metric(space, k=int(k), seed=trial_seed)
        return np.asarray([estimate])
    if config.method == 'uniform':
        size = min(space.n, int(math.ceil(k)))
        Q = np.sort(make_rng(trial_seed).choice(space.n, size=size,
                                                replace=False))
        if space.is_graph:
            return uniform_all_nodes(space, Q).w_hat[targets]
        return np.asarray([uniform_estimate_w(space, Q, int(z))
                           for z in targets])
    base = fixed_base
    if base is None:
        base = choose_base_set(space, config.base, derive_seed(trial_seed, 0))
    coeffs = compute_coefficients(space, base)
    sample = draw_sample(coeffs, k, derive_seed(trial_seed, 1))
    if space.is_graph:
        return estimate_all_nodes(space, sample).w_hat[targets]
    return estimate_points(space, sample, targets)


def _trial_helper(args):
    backing, config, t, targets, fixed_base = args
    space = DistanceSpace(backing)
    values = _trial_estimates(space, config, t, targets, fixed_base)
    return values, space.counter.snapshot()


def _choose_targets(config, n):
    if config.method == 'pairs':
        return None
    if config.probes <= 0 or config.probes >= n:
        return np.arange(n)
    rng = make_rng(derive_seed(config.seed, PROBE_STREAM))
    return np.sort(rng.choice(n, size=config.probes, replace=False))


def _pps_constant(config, oracle_space, fixed_base):
    trial_seed = derive_seed(config.seed, 0)
    if config.method == 'weighted':
        base = fixed_base
        if base is None:
            base = choose_base_set(oracle_space, config.base,
                                   derive_seed(trial_seed, 0))
        coeffs = compute_coefficients(oracle_space, base)
        return measure_pps_constant(coeffs, oracle_space)
    if config.method == 'pairs':
        coeffs, rho = pair_marginals(oracle_space, derive_seed(trial_seed, 10))
        return measure_pair_constant(coeffs, rho, oracle_space)
    return None


@metrics.timer('run_trials')
def run_trials(config, space=None):
    """Runs `config.trials` seeded trials against exact oracle truth.

    Every trial gets its own DistanceSpace over the same backing, so the
    reported budget is the exact sum of the per-trial counters and does
    not depend on `num_parallel`.
    """
    if space is None:
        space = config.build_space()
    backing = space.backing
    oracle_space = DistanceSpace(backing)
    targets = _choose_targets(config, space.n)
    budget = CounterSnapshot(0, 0)

    fixed_base = None
    if config.method == 'weighted' and not config.resample_base:
        base_space = DistanceSpace(backing)
        fixed_base = choose_base_set(base_space, config.base,
                                     derive_seed(config.seed, BASE_STREAM))
        budget = base_space.counter.snapshot()

    jobs = [(backing, config, t, targets, fixed_base)
            for t in range(config.trials)]
    if config.num_parallel > 1:
        with mp.Pool(config.num_parallel) as pool:
            rets = pool.map(_trial_helper, jobs)
    else:
        rets = [_trial_helper(job) for job in jobs]

    estimates = np.vstack([values for values, _ in rets])
    distance_evals = budget.distance_evals + \
        sum(used.distance_evals for _, used in rets)
    sssp_calls = budget.sssp_calls + sum(used.sssp_calls for _, used in rets)

    if config.method == 'pairs':
        truth = [exact_aps(oracle_space)]
        names = ['aps']
    else:
        truth = exact_w_all(oracle_space)[targets]
        names = targets.tolist()
    report = ErrorReport(config.method, names, truth, estimates,
                         distance_evals, sssp_calls,
                         _pps_constant(config, oracle_space, fixed_base))
    logging.info('Finished %d %s trials: max relative error %f, '
                 '%d distance evaluations, %d SSSP calls', config.trials,
                 config.method, report.max_rel_error, distance_evals,
                 sssp_calls)
    return report


def transposition_rate(space, epsilon, size, trials, seed, num_pairs=200):
    """Empirical rate of sample sums ordering a far-apart pair wrongly.

    Over random pairs (u, v) with W(v) >= (1 + epsilon) W(u), counts the
    trials in which a uniform Q of `size` nodes has W_Q(u) > W_Q(v).
    """
    matrix = exact_distance_matrix(space)
    w = matrix.sum(axis=1)
    n = space.n
    rng = make_rng(seed)
    us = rng.integers(0, n, size=num_pairs)
    vs = rng.integers(0, n, size=num_pairs)
    keep = w[vs] >= (1 + epsilon) * w[us]
    us, vs = us[keep], vs[keep]
    size = min(n, int(size))
    bound = math.exp(-epsilon ** 2 * size / 64.0)
    if len(us) == 0:
        return TranspositionRate(0.0, bound, 0.0, 0)
    flips = 0
    for t in range(trials):
        Q = make_rng(derive_seed(seed, t)).choice(n, size=size, replace=False)
        sums = matrix[:, Q].sum(axis=1)
        flips += int(np.count_nonzero(sums[us] > sums[vs]))
    events = trials * len(us)
    rate = flips / float(events)
    sigma = math.sqrt(max(rate * (1 - rate), 1.0 / events) / events)
    return TranspositionRate(rate, bound, sigma, events)


def format_summary(report, max_rows=20):
    table = PrettyTable(['target', 'truth', 'mean', 'variance', 'nrmse'])
    for row in report.to_rows()[:max_rows]:
        table.add_row([row['target'], '%.6g' % row['truth'],
                       '%.6g' % row['mean'], '%.6g' % row['variance'],
                       '%.4f' % row['nrmse']])
    lines = [table.get_string()]
    if len(report.targets) > max_rows:
        lines.append('... {} more targets'.format(
            len(report.targets) - max_rows))
    lines.append('method: {}  trials: {}'.format(report.method,
                                                 report.trials))
    lines.append('max relative error: {:.6g}'.format(report.max_rel_error))
    lines.append('distance evaluations: {}  sssp calls: {}'.format(
        report.distance_evals, report.sssp_calls))
    if report.pps_constant is not None:
        lines.append('measured pps constant: {:.6g}'.format(
            report.pps_constant))
    return '\n'.join(lines)
