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
import sys

import click
import numpy as np

from distsketch.common import metrics
from distsketch.common.errors import DataError, DistSketchError, UsageError
from distsketch.common.seeding import derive_seed, fresh_seed
from distsketch.estimation.apsum import aps_from_estimates, \
    estimate_aps_metric
from distsketch.estimation.baseline import uniform_median
from distsketch.estimation.estimators import approx_median, closeness, \
    estimate_all_nodes, estimate_point
from distsketch.hardness import reduction
from distsketch.harness.trials import TrialConfig, format_summary, \
    run_trials
from distsketch.io.edge_list import parse_edge_list, \
    parse_signed_edge_list, serialize_graph
from distsketch.io.point_file import parse_points
from distsketch.io.report_writer import CsvDictWriter, \
    write_estimate_report
from distsketch.io.sample_file import parse_sample, serialize_sample
from distsketch.oracle.exact import exact_aps, exact_w_all
from distsketch.sampling.coefficients import choose_base_set, \
    compute_coefficients
from distsketch.sampling.poisson import draw_sample, k_for_cv
from distsketch.space.distance_space import DistanceSpace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


def _setup_logging(verbosity):
    logging.getLogger().setLevel(_LEVELS[verbosity])
    logging.basicConfig(format="%(asctime)s %(filename)s "\
                               "%(lineno)s %(levelname)s - %(message)s")


def _read(path):
    with open(path) as fin:
        return fin.read()


def _load_space(graph, points):
    if (graph is None) == (points is None):
        raise UsageError('pass exactly one of --graph and --points')
    if graph is not None:
        return DistanceSpace(parse_edge_list(_read(graph)))
    return DistanceSpace(parse_points(_read(points)))


def _resolve_seed(seed):
    if seed is None:
        seed = fresh_seed()
        click.echo('seed: {}'.format(seed), err=True)
    return seed


def _resolve_k(k, epsilon):
    if k is not None:
        if not k > 0:
            raise UsageError('--k must be positive')
        return k
    if epsilon is None:
        raise UsageError('pass --k or --epsilon')
    return k_for_cv(epsilon)


def _draw_weighted_sample(space, k, epsilon, base, seed, num_parallel=1):
    k = _resolve_k(k, epsilon)
    base_set = choose_base_set(space, base, derive_seed(seed, 0))
    coeffs = compute_coefficients(space, base_set, num_parallel)
    return draw_sample(coeffs, k, seed)


def _sample_for(space, opts):
    if opts['sample'] is not None:
        sample = parse_sample(_read(opts['sample']))
        if sample.n != space.n:
            raise DataError('sample was drawn for n={}, input has n={}'.format(
                sample.n, space.n))
        return sample
    return _draw_weighted_sample(space, opts['k'], opts['epsilon'],
                                 opts['base'], _resolve_seed(opts['seed']),
                                 opts['num_parallel'])


def _emit_budget(command, space):
    tags = {'command': command}
    metrics.emit_counter('distance_evals', space.counter.distance_evals, tags)
    metrics.emit_counter('sssp_calls', space.counter.sssp_calls, tags)


def input_options(func):
    func = click.option('--points', type=click.Path(exists=True,
                                                    dir_okay=False),
                        help='point file: CSV coordinates or `matrix n`')(func)
    func = click.option('--graph', type=click.Path(exists=True,
                                                   dir_okay=False),
                        help='edge list with `u v w` lines')(func)
    return func


def sampling_options(func):
    options = [
        click.option('--seed', type=int, default=None,
                     help='master seed; drawn from system entropy and '
                          'printed to stderr when absent'),
        click.option('--k', type=float, default=None,
                     help='sample size parameter k'),
        click.option('--epsilon', type=float, default=None,
                     help='target error; sets k when --k is absent'),
        click.option('--base', default='uniform:2', show_default=True,
                     help='base set policy: uniform:<b>, uniform-log, wp '
                          'or relaxed-wp'),
        click.option('--sample', type=click.Path(exists=True,
                                                 dir_okay=False),
                     default=None, help='reuse a saved sample file'),
        click.option('--num-parallel', type=click.IntRange(min=1),
                     default=1, show_default=True),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def common_options(func):
    func = click.option('--output', '-o', default='-',
                        help='output file, `-` for standard output')(func)
    func = click.option('--verbosity', type=click.IntRange(0, 2), default=0,
                        help='0 warning, 1 info, 2 debug')(func)
    return func


@click.group()
def cli_group():
    """Sample-based distance sums, centrality and 1-median estimates."""


@cli_group.command('sample')
@input_options
@sampling_options
@common_options
def sample_command(graph, points, output, verbosity, **opts):
    """Build universal PPS coefficients and save a weighted sample."""
    _setup_logging(verbosity)
    space = _load_space(graph, points)
    opts['sample'] = None
    sample = _sample_for(space, opts)
    with click.open_file(output, 'w') as fout:
        fout.write(serialize_sample(sample))
    _emit_budget('sample', space)


@cli_group.command('all-nodes')
@input_options
@sampling_options
@common_options
@click.option('--verify', is_flag=True, help='add exact w and cc columns')
def all_nodes_command(graph, points, output, verbosity, verify, **opts):
    """Estimate W(v) and closeness for every node."""
    _setup_logging(verbosity)
    space = _load_space(graph, points)
    estimates = estimate_all_nodes(space, _sample_for(space, opts),
                                   opts['num_parallel'])
    _emit_budget('all-nodes', space)
    exact = exact_w_all(DistanceSpace(space.backing)) if verify else None
    with click.open_file(output, 'w') as fout:
        write_estimate_report(fout, estimates.w_hat,
                              closeness(estimates).cc, 'weighted', exact)


def _parse_location(text):
    try:
        return np.asarray([float(x) for x in text.split(',')])
    except ValueError:
        raise UsageError('--at expects comma separated coordinates')


@cli_group.command('query')
@input_options
@sampling_options
@common_options
@click.option('--node', type=int, default=None, help='query node id')
@click.option('--at', 'location', default=None,
              help='query location `x,y,...` (coordinate point sets)')
@click.option('--verify', is_flag=True, help='add the exact sum')
def query_command(graph, points, output, verbosity, node, location, verify,
                  **opts):
    """Estimate W(z) for one node or location from |S| distances."""
    _setup_logging(verbosity)
    if (node is None) == (location is None):
        raise UsageError('pass exactly one of --node and --at')
    space = _load_space(graph, points)
    sample = _sample_for(space, opts)
    if node is not None:
        z, label = space.check_node(node), node
    else:
        z, label = _parse_location(location), location
    row = {'query': label, 'w_hat': estimate_point(space, sample, z)}
    _emit_budget('query', space)
    if verify:
        exact_space = DistanceSpace(space.backing)
        if node is not None:
            row['w'] = exact_space.single_source(z).sum
        else:
            row['w'] = float(np.sum(
                exact_space.distances_to_point(z, np.arange(space.n))))
    with click.open_file(output, 'w') as fout:
        CsvDictWriter(fout).write(row)


@cli_group.command('aps')
@input_options
@sampling_options
@common_options
@click.option('--method', type=click.Choice(['nodes', 'pairs']),
              default='nodes', show_default=True)
@click.option('--verify', is_flag=True, help='add the exact all-pairs sum')
def aps_command(graph, points, output, verbosity, method, verify, **opts):
    """Estimate the sum of distances over all unordered pairs."""
    _setup_logging(verbosity)
    space = _load_space(graph, points)
    if method == 'nodes':
        sample = _sample_for(space, opts)
        estimate = aps_from_estimates(estimate_all_nodes(
            space, sample, opts['num_parallel']))
        k, seed = sample.k, sample.seed
    else:
        if opts['k'] is None and opts['epsilon'] is None:
            raise UsageError('pass --k or --epsilon')
        seed = _resolve_seed(opts['seed'])
        k = None if opts['k'] is None else int(opts['k'])
        estimate, pairs = estimate_aps_metric(space, k=k,
                                              epsilon=opts['epsilon'],
                                              seed=seed)
        k = pairs.k
    _emit_budget('aps', space)
    row = {'aps_estimate': estimate, 'k': k,
           'distance_evals': space.counter.distance_evals, 'seed': seed}
    if verify:
        row['aps'] = exact_aps(DistanceSpace(space.backing))
    with click.open_file(output, 'w') as fout:
        CsvDictWriter(fout).write(row)


@cli_group.command('median')
@input_options
@sampling_options
@common_options
@click.option('--method', type=click.Choice(['weighted', 'uniform']),
              default='weighted', show_default=True)
@click.option('--delta', type=float, default=0.05, show_default=True,
              help='failure probability of the uniform method')
@click.option('--verify', is_flag=True,
              help='one exact single-source computation at the winner')
def median_command(graph, points, output, verbosity, method, delta, verify,
                   **opts):
    """Approximate 1-median: the node of smallest estimated W."""
    _setup_logging(verbosity)
    space = _load_space(graph, points)
    if method == 'weighted':
        winner = approx_median(estimate_all_nodes(
            space, _sample_for(space, opts), opts['num_parallel']))
    else:
        if opts['epsilon'] is None:
            raise UsageError('the uniform method needs --epsilon')
        winner = uniform_median(space, opts['epsilon'], delta,
                                _resolve_seed(opts['seed']))
    _emit_budget('median', space)
    row = {'v': winner, 'method': method}
    if verify:
        row['w'] = space.single_source(winner).sum
    with click.open_file(output, 'w') as fout:
        CsvDictWriter(fout).write(row)


@cli_group.command('exact')
@input_options
@common_options
def exact_command(graph, points, output, verbosity):
    """Exact W(v) and closeness by brute force."""
    _setup_logging(verbosity)
    space = _load_space(graph, points)
    w = exact_w_all(space)
    _emit_budget('exact', space)
    with click.open_file(output, 'w') as fout:
        write_estimate_report(fout, w, closeness(w).cc, 'exact')


@cli_group.command('reduce-triangle')
@click.argument('edge_list', type=click.Path(exists=True, dir_okay=False))
@click.option('--bound', 'M', type=click.IntRange(min=1), default=None,
              help='weight bound M, default the largest |w|')
@common_options
def reduce_triangle_command(edge_list, M, output, verbosity):
    """Emit the 3n-node instance and the negative-triangle verdict."""
    _setup_logging(verbosity)
    g = parse_signed_edge_list(_read(edge_list), M)
    reduced = reduction.reduce(g)
    found = reduction.detect_negative_triangle_via_aps(g)
    with click.open_file(output, 'w') as fout:
        fout.write('# N={} negative_triangle={}\n'.format(
            reduced.N, 'true' if found else 'false'))
        fout.write(serialize_graph(reduced.to_graph()))


@cli_group.command('eval')
@click.argument('config', type=click.Path(exists=True, dir_okay=False))
@click.option('--report', default=None,
              help='write the per-target CSV here instead of stdout')
@click.option('--verbosity', type=click.IntRange(0, 2), default=0)
def eval_command(config, report, verbosity):
    """Run seeded trials from a key=value config against exact truth."""
    _setup_logging(verbosity)
    trial_config = TrialConfig.from_file(config)
    result = run_trials(trial_config)
    metrics.emit_counter('distance_evals', result.distance_evals,
                         {'command': 'eval'})
    metrics.emit_counter('sssp_calls', result.sssp_calls,
                         {'command': 'eval'})
    tags = {'command': 'eval', 'method': result.method}
    metrics.emit_store('max_rel_error', result.max_rel_error, tags)
    if result.pps_constant is not None:
        metrics.emit_store('pps_constant', result.pps_constant, tags)
    with click.open_file(report or '-', 'w') as fout:
        writer = CsvDictWriter(fout)
        for row in result.to_rows():
            writer.write(row)
    click.echo(format_summary(result))


def main(argv=None):
    """Runs the command line and returns the process exit code."""
    try:
        cli_group.main(args=argv, prog_name='distsketch',
                       standalone_mode=False)
    except click.exceptions.Abort:
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except UsageError as e:
        click.echo('error: {}'.format(e), err=True)
        return EXIT_USAGE
    except DataError as e:
        click.echo('error: {}'.format(e), err=True)
        return EXIT_DATA
    except DistSketchError as e:
        click.echo('error: {}'.format(e), err=True)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
