# -*- coding: utf-8 -*-
"""Benchmark runner: every selected algorithm on every instance of a corpus"""

import logging
import os
from functools import partial
from multiprocessing.pool import ThreadPool

from .errors import SolveTimeout
from .models.harness import Algorithm, BenchReport, BenchRow
from .models.io import GeneratorSpec
from .pgio import generate, load_game
from .qpt_solver import QptSolver
from .utils import threads_from_env, verdict_hash
from .zielonka_solver import ZielonkaSolver

logger = logging.getLogger(__name__)

GAME_SUFFIXES = ('.pg', '.gm')
GENERATOR_FAMILIES = ('ring', 'random')


def make_solver(algorithm, mode=None, verify=True, timeout=None, edge_cache=False,
                order_seed=None, trace=None):
    """Solver front for an Algorithm; options the algorithm has no use for are ignored"""
    if algorithm is Algorithm.ZIELONKA:
        return ZielonkaSolver(mode, verify, timeout)
    return QptSolver(mode, verify, timeout, edge_cache=edge_cache, trace=trace,
                     order_seed=order_seed)


def load_instances(path):
    """Read a benchmark corpus.

    A directory contributes every game file in it, sorted by name. Any other path is
    a manifest with one instance per line: a game file relative to the manifest,
    ``ring N`` or ``random N MIN MAX MAXCOL SEED``. Blank lines and lines starting
    with ``#`` are skipped.

    :returns: list of (label, Arena) in benchmark order
    :raises: InvalidSpec, PgSyntaxError, ArenaError, OSError
    """
    if os.path.isdir(path):
        names = sorted(name for name in os.listdir(path) if name.endswith(GAME_SUFFIXES))
        return [(name, load_game(os.path.join(path, name))) for name in names]

    base = os.path.dirname(path)
    instances = []
    with open(path, encoding='utf-8') as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            tokens = line.split()
            if tokens[0].lower() in GENERATOR_FAMILIES:
                spec = GeneratorSpec.from_tokens(tokens)
                instances.append((spec.describe(), generate(spec)))
            else:
                instances.append((line, load_game(os.path.join(base, line))))
    logger.debug('manifest %s lists %d instances', path, len(instances))
    return instances


def run_instance(label, arena, algorithm, mode=None, timeout=None, verify=True):
    """Solve one instance with one algorithm

    :returns: BenchRow
    """
    row = BenchRow(label, arena.n, arena.m, len(arena.colour_set), str(algorithm))
    solver = make_solver(algorithm, mode, verify=verify, timeout=timeout)
    try:
        solution = solver.solve(arena)
    except SolveTimeout:
        logger.warning('%s timed out on %s', algorithm, label)
        row.status = BenchRow.TIMEOUT
        return row

    row.wall_time = solution.stats.wall_time
    if algorithm is Algorithm.QPT:
        row.lifts = solution.stats.total_lifts
    row.verdict_hash = verdict_hash(solution.regions.winners(arena.n))
    if solution.verdict is not None and not solution.verdict:
        row.status = BenchRow.FAILED
    return row


def run_bench(instances, algorithms=(Algorithm.QPT, Algorithm.ZIELONKA), mode=None,
              timeout=None, threads=None, verify=True):
    """Run every algorithm on every instance and cross-check the winners.

    Rows record wall-clock time, so two runs of one corpus agree only on
    ``BenchReport.comparable()``, which leaves the timing columns out.

    Runs are spread over a pool of worker threads; rows come back in instance order,
    then algorithm order, whatever order the runs finish in.

    :param instances: list of (label, Arena)
    :param algorithms: Algorithm sequence
    :param mode: UpdateMode for the value-iteration solver
    :param timeout: per-run wall-clock limit in seconds
    :param threads: worker cap, read from PARIGRADE_THREADS when omitted
    :param verify: verify every solution
    :returns: BenchReport
    """
    jobs = [(label, arena, algorithm) for label, arena in instances for algorithm in algorithms]
    if not jobs:
        return BenchReport()

    threads = threads if threads is not None else threads_from_env()
    run = partial(run_instance, mode=mode, timeout=timeout, verify=verify)
    with ThreadPool(min(threads, len(jobs))) as pool:
        rows = pool.starmap(run, jobs)

    report = BenchReport(rows)
    for instance in report.cross_check():
        logger.error('algorithms disagree on the winners of %s', instance)
    return report


def write_report(report, prefix):
    """Write PREFIX.csv and PREFIX.json

    :returns: the two paths written
    """
    paths = (prefix + '.csv', prefix + '.json')
    with open(paths[0], 'w', encoding='utf-8', newline='') as handle:
        handle.write(report.to_csv())
    with open(paths[1], 'w', encoding='utf-8') as handle:
        handle.write(report.to_json() + '\n')
    return paths
