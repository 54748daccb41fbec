# -*- coding: utf-8 -*-
"""Value iteration over succinct witnesses.

Every vertex starts at the blank witness and is lifted to the extremum, over its
successors, of their antagonistic updates: the maximum for Even's vertices and the
minimum for Odd's. At the least fixpoint Even wins exactly where the measure is Won.
"""

import logging
import time
from collections import deque

import numpy as np

from .arena import colour_table, stats as arena_stats
from .errors import BoundViolated, SolveTimeout
from .models.game import Player, RegionPair, Strategy
from .models.solving import LiftStats, ProgressMeasure, Solution
from .witness import DEFAULT_MODE, WON, au, count_W

logger = logging.getLogger(__name__)

CHECK_EVERY = 256


class _Context:
    """Values every lift needs, computed once per solve"""

    def __init__(self, arena, mode, even_count=None, table=None, edge_cache=False):
        if even_count is None:
            even_count = arena_stats(arena).even_count
        self.arena = arena
        self.mode = mode
        self.even_count = even_count
        self.table = table if table is not None else colour_table(arena, mode)
        self.cache = {} if edge_cache else None
        self.updates = {}

    def antagonistic(self, witness, colour):
        """``au`` memoised on (witness, colour) for the lifetime of the context"""
        key = (witness, colour)
        value = self.updates.get(key)
        if value is None:
            value = au(witness, colour, self.even_count, self.mode, self.table)
            self.updates[key] = value
        return value

    def update(self, measure, vertex, successor):
        colour = self.arena.colour(vertex)
        if self.cache is None:
            return self.antagonistic(measure[successor], colour)
        generation = measure.generations[successor]
        cached = self.cache.get((vertex, successor))
        if cached is not None and cached[0] == generation:
            return cached[1]
        value = self.antagonistic(measure[successor], colour)
        self.cache[(vertex, successor)] = (generation, value)
        return value

    def target(self, measure, vertex):
        successors = self.arena.successors[vertex]
        if self.arena.owner(vertex) is Player.EVEN:
            best = None
            for successor in successors:
                value = self.update(measure, vertex, successor)
                if value.is_won:
                    return WON
                if best is None or value > best:
                    best = value
            return best
        best = None
        for successor in successors:
            value = self.update(measure, vertex, successor)
            if best is None or value < best:
                best = value
        return best


def lift_target(arena, measure, vertex, mode=DEFAULT_MODE, even_count=None, table=None):
    """Witness vertex would be lifted to: the max (Even) or min (Odd) over its
    successors s of au(measure[s], colour(vertex)).

    :param arena: Arena
    :param measure: ProgressMeasure
    :param vertex: dense vertex id
    :param mode: UpdateMode
    :param even_count: threshold e, computed from arena when omitted
    :param table: ColourTable, computed from arena when omitted
    :returns: Witness
    """
    return _Context(arena, mode, even_count, table).target(measure, vertex)


def find_liftable(arena, measure, mode=DEFAULT_MODE, even_count=None, table=None):
    """Vertices whose lift target is above their current witness"""
    context = _Context(arena, mode, even_count, table)
    return [vertex for vertex in range(arena.n)
            if context.target(measure, vertex) > measure[vertex]]


def _odd_everywhere(arena):
    choice = {vertex: arena.successors[vertex][0] for vertex in arena.vertices_of(Player.ODD)}
    return RegionPair(set(), range(arena.n), Strategy(Player.EVEN), Strategy(Player.ODD, choice))


def solve(arena, mode=DEFAULT_MODE, edge_cache=False, timeout=None, order_seed=None,
          trace=None):
    """Lift the all-blank measure to its least fixpoint.

    :param arena: Arena
    :param mode: UpdateMode
    :param edge_cache: reuse per-edge updates while the successor is unchanged
    :param timeout: wall-clock limit in seconds, checked every few hundred pops
    :param order_seed: shuffle the initial worklist and the order predecessors are
        queued in; None keeps ascending id order
    :param trace: optional callable(vertex, old, new) invoked on every lift
    :returns: Solution without a verdict
    :raises: SolveTimeout
    :raises: BoundViolated
    """
    started = time.monotonic()
    stats = arena_stats(arena)
    table = colour_table(arena, mode)
    length = stats.witness_length
    logger.info('solving n=%d m=%d e=%d r=%d L=%d mode=%r', arena.n, arena.m,
                stats.even_count, stats.relevant_colours, length, mode)

    measure = ProgressMeasure.bottom(arena.n, length)
    lift_stats = LiftStats([0] * arena.n)
    if stats.even_count == 0:
        lift_stats.wall_time = time.monotonic() - started
        return Solution(_odd_everywhere(arena), measure, table, lift_stats)

    lift_stats.bound = arena.n * count_W(max(table.width, 1), length)
    context = _Context(arena, mode, stats.even_count, table, edge_cache)
    rng = np.random.default_rng(order_seed) if order_seed is not None else None

    initial = list(range(arena.n))
    if rng is not None:
        initial = [int(vertex) for vertex in rng.permutation(arena.n)]
    queue = deque(initial)
    queued = [True] * arena.n
    lift_stats.pushes = len(initial)
    total = 0
    pops = 0
    while queue:
        if timeout is not None and pops % CHECK_EVERY == 0 \
                and time.monotonic() - started > timeout:
            logger.warning('solve timed out after %s seconds', timeout)
            raise SolveTimeout(timeout)
        pops += 1
        vertex = queue.popleft()
        queued[vertex] = False
        target = context.target(measure, vertex)
        if not target > measure[vertex]:
            continue
        old = measure[vertex]
        measure.lift(vertex, target)
        lift_stats.lifts_per_vertex[vertex] += 1
        total += 1
        if total > lift_stats.bound:
            raise BoundViolated('{0} lifts exceed the bound {1}'.format(total, lift_stats.bound))
        if trace is not None:
            trace(vertex, old, target)
        predecessors = arena.predecessors[vertex]
        if rng is not None:
            predecessors = [predecessors[i] for i in rng.permutation(len(predecessors))]
        for predecessor in predecessors:
            if not queued[predecessor]:
                queued[predecessor] = True
                queue.append(predecessor)
                lift_stats.pushes += 1

    even_strategy, odd_strategy = extract_strategies(
        arena, measure, mode, stats.even_count, table)
    won = measure.won()
    regions = RegionPair(won, set(range(arena.n)) - won, even_strategy, odd_strategy)
    lift_stats.wall_time = time.monotonic() - started
    logger.info('solved with %d lifts in %.4fs, Even wins %d of %d vertices',
                lift_stats.total_lifts, lift_stats.wall_time, len(won), arena.n)
    return Solution(regions, measure, table, lift_stats)


def extract_strategies(arena, measure, mode=DEFAULT_MODE, even_count=None, table=None):
    """Positional strategies read off a fixpoint measure.

    Each player moves to a successor attaining its extremum of the antagonistic
    updates, the maximum for Even and the minimum for Odd. Even only chooses where
    it wins and prefers a successor whose own witness is Won; remaining ties go to
    the smallest successor id.

    :returns: (even Strategy, odd Strategy)
    """
    context = _Context(arena, mode, even_count, table)
    even_choice = {}
    odd_choice = {}
    for vertex in range(arena.n):
        is_even = arena.owner(vertex) is Player.EVEN
        if measure[vertex].is_won is not is_even:
            continue
        values = [(context.update(measure, vertex, s), s) for s in arena.successors[vertex]]
        if is_even:
            highest = max(value for value, _ in values)
            attaining = [s for value, s in values if value == highest]
            even_choice[vertex] = next(
                (s for s in attaining if measure[s].is_won), attaining[0])
        else:
            lowest = min(value for value, _ in values)
            odd_choice[vertex] = next(s for value, s in values if value == lowest)
    return Strategy(Player.EVEN, even_choice), Strategy(Player.ODD, odd_choice)


def lift_order_independence_check(arena, seeds, mode=DEFAULT_MODE):
    """Whether every seeded worklist order reaches the same fixpoint"""
    measures = [solve(arena, mode, order_seed=seed).measure for seed in seeds]
    return all(measure == measures[0] for measure in measures[1:])
