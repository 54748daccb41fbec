# -*- coding: utf-8 -*-
"""Reference algorithms: the recursive solver, a brute-force oracle for tiny
games, a solution verifier and the delaying play on the ring family."""

import itertools
import logging
import time
from collections import deque

import networkx as nx

from .arena import witness_length
from .errors import DeadEnd, MalformedInput, SolveTimeout
from .models.game import Player, RegionPair, Strategy
from .models.harness import SimStep, SimTrace
from .models.solving import Verdict
from .models.witness import ColourTable, RuleVariant, UpdateMode, Witness
from .pgio import gen_ring
from .witness import iter_witnesses, ru

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 8
STEP_LIMIT = 10 ** 6


def attractor(arena, region, target, player):
    """Vertices of region from which player forces a visit to target.

    :param arena: Arena
    :param region: vertex set the play is confined to
    :param target: subset of region
    :param player: Player doing the attracting
    :returns: (attractor set, dict with player's attracting moves outside target)
    """
    attracted = set(target)
    choice = {}
    escapes = {vertex: sum(1 for s in arena.successors[vertex] if s in region)
               for vertex in region}
    queue = deque(attracted)
    while queue:
        vertex = queue.popleft()
        for predecessor in arena.predecessors[vertex]:
            if predecessor not in region or predecessor in attracted:
                continue
            if arena.owner(predecessor) is player:
                choice[predecessor] = vertex
            else:
                escapes[predecessor] -= 1
                if escapes[predecessor]:
                    continue
            attracted.add(predecessor)
            queue.append(predecessor)
    return attracted, choice


def _zielonka(arena, region, deadline, timeout):
    regions = {Player.EVEN: set(), Player.ODD: set()}
    choices = {Player.EVEN: {}, Player.ODD: {}}
    region = set(region)
    while region:
        if deadline is not None and time.monotonic() > deadline:
            raise SolveTimeout(timeout)
        top = max(arena.colour(vertex) for vertex in region)
        player = Player.of_colour(top)
        opponent = player.opponent
        heads = {vertex for vertex in region if arena.colour(vertex) == top}
        attracted, attracting = attractor(arena, region, heads, player)
        sub_regions, sub_choices = _zielonka(arena, region - attracted, deadline, timeout)

        if not sub_regions[opponent]:
            regions[player] |= region
            choices[player].update(sub_choices[player])
            choices[player].update(attracting)
            for vertex in heads:
                if arena.owner(vertex) is player:
                    choices[player][vertex] = next(
                        s for s in arena.successors[vertex] if s in region)
            break

        lost, escaping = attractor(arena, region, sub_regions[opponent], opponent)
        regions[opponent] |= lost
        choices[opponent].update(sub_choices[opponent])
        choices[opponent].update(escaping)
        region -= lost
    return regions, choices


def zielonka(arena, region=None, timeout=None):
    """Recursive solver with positional strategies.

    :param arena: Arena
    :param region: optional vertex set closed enough to be a game of its own;
        defaults to every vertex
    :param timeout: wall-clock limit in seconds
    :returns: RegionPair
    :raises: DeadEnd when a vertex of region has no successor inside it
    :raises: SolveTimeout
    """
    region = set(range(arena.n)) if region is None else set(region)
    for vertex in region:
        if not any(s in region for s in arena.successors[vertex]):
            raise DeadEnd(vertex)
    deadline = time.monotonic() + timeout if timeout is not None else None
    regions, choices = _zielonka(arena, region, deadline, timeout)
    return RegionPair(regions[Player.EVEN], regions[Player.ODD],
                      Strategy(Player.EVEN, choices[Player.EVEN]),
                      Strategy(Player.ODD, choices[Player.ODD]))


def _cycle_winner(arena, start, even_choice, odd_choice):
    seen = {}
    path = []
    vertex = start
    while vertex not in seen:
        seen[vertex] = len(path)
        path.append(vertex)
        choice = even_choice if arena.owner(vertex) is Player.EVEN else odd_choice
        vertex = choice[vertex]
    top = max(arena.colour(v) for v in path[seen[vertex]:])
    return Player.of_colour(top)


def solve_by_enumeration(arena):
    """Winning regions by trying every pair of positional strategies.

    Even wins a vertex when one of her strategies beats every strategy of Odd.
    Only for games with at most eight vertices.

    :returns: RegionPair without strategies
    """
    if arena.n > ENUMERATION_LIMIT:
        raise ValueError('enumeration is limited to {} vertices'.format(ENUMERATION_LIMIT))
    evens = arena.vertices_of(Player.EVEN)
    odds = arena.vertices_of(Player.ODD)
    odd_strategies = [dict(zip(odds, moves)) for moves in
                      itertools.product(*(arena.successors[v] for v in odds))]
    even_region = set()
    for moves in itertools.product(*(arena.successors[v] for v in evens)):
        even_choice = dict(zip(evens, moves))
        for vertex in range(arena.n):
            if vertex in even_region:
                continue
            if all(_cycle_winner(arena, vertex, even_choice, odd_choice) is Player.EVEN
                   for odd_choice in odd_strategies):
                even_region.add(vertex)
    return RegionPair(even_region, set(range(arena.n)) - even_region)


def _bad_cycle(arena, region, player, graph):
    """Cycle in graph whose top colour favours the opponent of player, or None"""
    bad_colours = sorted({arena.colour(v) for v in region
                          if Player.of_colour(arena.colour(v)) is not player})
    for colour in bad_colours:
        low = graph.subgraph(v for v in region if arena.colour(v) <= colour)
        for component in nx.strongly_connected_components(low):
            heads = [v for v in component if arena.colour(v) == colour]
            if not heads:
                continue
            head = min(heads)
            if graph.has_edge(head, head):
                return [head]
            if len(component) == 1:
                continue
            inside = low.subgraph(component)
            successor = min(s for s in inside.successors(head))
            path = nx.shortest_path(inside, successor, head)
            return [head] + path[:-1]
    return None


def verify_solution(arena, regions):
    """Check that both players' strategies win their declared regions.

    Each region must be closed under its owner's choices and every opponent move,
    and in the graph those moves leave every cycle must have a top colour of the
    owner's parity. Choices made outside the owner's region are ignored.

    :param arena: Arena
    :param regions: RegionPair carrying both strategies
    :returns: Verdict
    :raises: MalformedInput when regions do not partition the vertices or a choice
        is not an edge of arena
    """
    everything = set(range(arena.n))
    if regions.even_region & regions.odd_region:
        raise MalformedInput('regions overlap on {}'.format(
            sorted(regions.even_region & regions.odd_region)))
    if regions.even_region | regions.odd_region != everything:
        raise MalformedInput('regions miss vertices {}'.format(
            sorted(everything - regions.even_region - regions.odd_region)))

    for player in (Player.EVEN, Player.ODD):
        region = regions.region(player)
        strategy = regions.strategy(player)
        strategy.check_edges(arena)
        strategy = strategy.restricted_to(region)
        graph = nx.DiGraph()
        graph.add_nodes_from(region)
        for vertex in sorted(region):
            if arena.owner(vertex) is player:
                if vertex not in strategy:
                    return Verdict.failed('{} has no choice'.format(player), vertex)
                target = strategy.get(vertex)
                if target not in region:
                    return Verdict.failed('{} leaves its region'.format(player), vertex)
                graph.add_edge(vertex, target)
                continue
            for target in arena.successors[vertex]:
                if target not in region:
                    return Verdict.failed(
                        '{} escapes the region of {}'.format(player.opponent, player), vertex)
                graph.add_edge(vertex, target)
        cycle = _bad_cycle(arena, region, player, graph)
        if cycle is not None:
            logger.debug('cycle %s loses for %s', cycle, player)
            return Verdict.failed('cycle losing for {}'.format(player), cycle)
    return Verdict.passed()


def even_witness_count(n, length):
    """Number of shape-valid witnesses over blank and the even colours 2..2n"""
    table = ColourTable(range(2, 2 * n + 1, 2))
    return sum(1 for _ in iter_witnesses(table, length))


def _odd_move(vertex, witness, table):
    """Odd's choice at even ring vertex below the top.

    :returns: (next vertex, ambiguous)
    """
    entries = witness.colours(table)[::-1]
    last = entries[0]
    if last is None:
        return 1, False
    present = [entry for entry in entries if entry is not None]
    ambiguous = last % 2 == 1 or last != vertex or min(present) < last
    matching = [index for index, entry in enumerate(entries) if entry == last]
    if matching == list(range(len(matching))):
        return vertex + 1, ambiguous
    return 1, ambiguous


def simulate_lower_bound(n, rule_variant=RuleVariant.EVEN_OVERFLOW, max_steps=STEP_LIMIT):
    """Play the ring of size 2n from vertex 1 with Odd delaying his loss.

    At an even vertex below 2n Odd returns to 1 when the rightmost entry is blank,
    moves on when the entries equal to the rightmost one sit together at the right,
    and returns to 1 otherwise. Every other vertex has a single move. The play
    stops at the witness holding 2n everywhere, at Won, or after max_steps.

    :returns: SimTrace
    """
    arena = gen_ring(n)
    size = 2 * n
    table = ColourTable(range(1, size + 1))
    mode = UpdateMode(rule_variant, compression=False)
    length = witness_length(n)
    top = Witness((table.rank(size),) * length)

    trace = SimTrace(n, rule_variant, table)
    witness = Witness.bottom(length)
    vertex = 1
    ambiguous = False
    while True:
        witness = ru(witness, arena.colour(vertex - 1), mode, table)
        trace.steps.append(SimStep(vertex, witness, ambiguous))
        if vertex % 2 == 0:
            trace.checkpoints.append(witness)
        if witness.is_won or witness == top:
            break
        if len(trace.steps) >= max_steps:
            logger.warning('lower-bound play for n=%d stopped after %d steps', n, max_steps)
            break
        ambiguous = False
        if vertex == size:
            vertex = 1
        elif vertex % 2:
            vertex += 1
        else:
            following, ambiguous = _odd_move(vertex, witness, table)
            if ambiguous:
                logger.warning('ambiguous delaying move at vertex %d with %s',
                               vertex, witness.to_string(table))
            vertex = following
    return trace
