# -*- coding: utf-8 -*-
"""Command-line front end.

Exit status: 0 on success, 1 for unreadable input, 2 when verification fails or
algorithms disagree, 3 on timeout.
"""

import logging
import sys
from contextlib import contextmanager

import click

from . import __version__
from .arena import colour_table, witness_length
from .baseline import even_witness_count, simulate_lower_bound, verify_solution
from .bench import load_instances, make_solver, run_bench, write_report
from .errors import SolveTimeout
from .models.harness import Algorithm, RunConfig
from .models.io import GeneratorSpec, SolutionDocument
from .models.witness import RuleVariant, UpdateMode
from .pgio import emit_pgsolver, emit_solution, generate, load_game, parse_solution
from .witness import count_W

logger = logging.getLogger(__name__)

EXIT_INPUT = 1
EXIT_UNVERIFIED = 2
EXIT_TIMEOUT = 3

ALGORITHMS = [algorithm.value for algorithm in Algorithm]
VARIANTS = RuleVariant.spellings()


def _abort(message, status):
    click.echo('error: {}'.format(message), err=True)
    sys.exit(status)


@contextmanager
def _exit_codes():
    """Turn input and timeout errors into their exit status"""
    try:
        yield
    except SolveTimeout as err:
        _abort(err, EXIT_TIMEOUT)
    except (ValueError, OSError) as err:
        _abort(err, EXIT_INPUT)


def _write(text, path):
    if path is None:
        click.echo(text, nl=False)
        return
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)


def _lift_printer(arena, mode):
    table = colour_table(arena, mode)

    def on_lift(vertex, old, new):
        click.echo('lift {0}: {1} -> {2}'.format(
            arena.original_ids[vertex], old.to_string(table), new.to_string(table)), err=True)
    return on_lift


def _mode(variant, no_compress):
    return UpdateMode(RuleVariant.from_string(variant), compression=not no_compress)


def _load(config):
    if config.generator is not None:
        return generate(config.generator)
    return load_game(config.input_path)


def mode_options(command):
    command = click.option('--no-compress', is_flag=True,
                           help='Keep odd extreme colours in witnesses.')(command)
    command = click.option('--mode', 'variant', type=click.Choice(VARIANTS), default='odd-overflow',
                           show_default=True, help='Update rule variant.')(command)
    return command


@click.group()
@click.version_option(__version__, prog_name='parigrade')
@click.option('-v', '--verbose', count=True, help='-v for progress, -vv for debugging.')
def main(verbose):
    """Parity game solving by succinct witnesses"""
    if verbose:
        logging.basicConfig(level=logging.INFO if verbose == 1 else logging.DEBUG,
                            format='%(levelname)s %(name)s: %(message)s')


@main.command()
@click.argument('game', required=False)
@click.option('--gen', 'generator', metavar='"FAMILY ARGS"',
              help='Generate the game instead, e.g. "ring 3" or "random 100 1 6 6 7".')
@click.option('--algo', type=click.Choice(ALGORITHMS), default='qpt', show_default=True)
@mode_options
@click.option('--edge-cache', is_flag=True, help='Cache antagonistic updates per edge.')
@click.option('--no-verify', is_flag=True, help='Skip strategy verification.')
@click.option('--timeout', type=float, help='Wall-clock limit in seconds.')
@click.option('--seed', type=int, help='Seed for a shuffled lift order.')
@click.option('--trace', is_flag=True, help='Print every lift to stderr.')
@click.option('--out', 'output', help='Solution file, stdout by default.')
def solve(game, generator, algo, variant, no_compress, edge_cache, no_verify, timeout, seed,
          trace, output):
    """Solve GAME and write its winning regions and strategies"""
    with _exit_codes():
        config = RunConfig(
            'solve', input_path=game,
            generator=GeneratorSpec.from_tokens(generator.split()) if generator else None,
            mode=_mode(variant, no_compress), algorithm=Algorithm.from_string(algo),
            edge_cache=edge_cache, trace=trace, verify=not no_verify, timeout=timeout,
            output=output, seed=seed)
        arena = _load(config)

        on_lift = _lift_printer(arena, config.mode) if config.trace else None
        solver = make_solver(config.algorithm, config.mode, verify=config.verify,
                             timeout=config.timeout, edge_cache=config.edge_cache,
                             order_seed=config.seed, trace=on_lift)
        solution = solver.solve(arena)

    _write(emit_solution(SolutionDocument.from_solution(solution, arena)), config.output)
    if solution.verdict is not None and not solution.verdict:
        _abort('solution failed verification: {}'.format(solution.verdict), EXIT_UNVERIFIED)


@main.command()
@click.argument('family', type=click.Choice(['ring', 'random']))
@click.argument('params', nargs=-1, type=int)
@click.option('--seed', type=int, default=0, show_default=True, help='Seed of a random game.')
@click.option('--out', 'output', help='Game file, stdout by default.')
def gen(family, params, seed, output):
    """Generate a game: ring N, or random N MIN_OUTDEG MAX_OUTDEG MAX_COLOUR"""
    with _exit_codes():
        tokens = [family] + [str(param) for param in params]
        if family == 'random':
            tokens.append(str(seed))
        arena = generate(GeneratorSpec.from_tokens(tokens))
    _write(emit_pgsolver(arena), output)


@main.command()
@click.argument('game')
@click.argument('solution')
def verify(game, solution):
    """Check that the strategies stored in SOLUTION win their regions of GAME"""
    with _exit_codes():
        arena = load_game(game)
        with open(solution, encoding='utf-8') as handle:
            document = parse_solution(handle.read(), arena)
        verdict = verify_solution(arena, document.to_regions(arena))
    if not verdict:
        _abort(verdict, EXIT_UNVERIFIED)
    click.echo('pass')


@main.command()
@click.argument('corpus')
@click.option('--algo', 'algorithms', type=click.Choice(ALGORITHMS), multiple=True,
              help='Algorithm to run; repeat for several. Both by default.')
@mode_options
@click.option('--timeout', type=float, help='Per-run wall-clock limit in seconds.')
@click.option('--no-verify', is_flag=True, help='Skip strategy verification.')
@click.option('--out', 'prefix', help='Write PREFIX.csv and PREFIX.json instead of stdout.')
def bench(corpus, algorithms, variant, no_compress, timeout, no_verify, prefix):
    """Run the algorithms over every instance of CORPUS, a directory or a manifest"""
    with _exit_codes():
        config = RunConfig('bench', input_path=corpus, mode=_mode(variant, no_compress),
                           verify=not no_verify, timeout=timeout, output=prefix)
        selected = [Algorithm.from_string(algo) for algo in algorithms] or list(Algorithm)
        instances = load_instances(config.input_path)
        report = run_bench(instances, selected, config.mode, config.timeout,
                           verify=config.verify)

    if config.output is None:
        click.echo(report.to_csv(), nl=False)
    else:
        write_report(report, config.output)
    if report.has_failure:
        _abort('algorithms disagree or a solution failed verification', EXIT_UNVERIFIED)


@main.command()
@click.argument('r', type=int)
@click.argument('l', type=int)
def count(r, l):  # noqa: E741
    """Bound on the number of witnesses for R colours and length L"""
    with _exit_codes():
        click.echo(count_W(r, l))


@main.command()
@click.argument('n', type=int)
@click.argument('variant', type=click.Choice(VARIANTS), default='even-overflow')
@click.option('--max-steps', type=int, default=10 ** 6, show_default=True)
@click.option('--out', 'output', help='Write every step as CSV.')
def simulate(n, variant, max_steps, output):
    """Delaying play on the ring of size 2N; prints the witness after each even vertex"""
    with _exit_codes():
        trace = simulate_lower_bound(n, RuleVariant.from_string(variant), max_steps)
    for witness in trace.checkpoints:
        click.echo(witness.to_string(trace.table))
    click.echo('steps={0} distinct={1} even_witnesses={2} flagged={3}'.format(
        len(trace), trace.distinct_count, even_witness_count(n, witness_length(n)),
        len(trace.flagged_steps)))
    if output is not None:
        _write(trace.to_csv(), output)
