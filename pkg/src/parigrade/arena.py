# -*- coding: utf-8 -*-
"""Building and measuring parity game arenas"""

from .errors import DanglingEdge, DeadEnd, DuplicateId
from .models.game import Arena, ArenaStats, VertexRecord
from .models.witness import ColourTable


def validate(records, successors):
    """Check a raw game and build its Arena over dense ids.

    Vertices are numbered in the order they are given; their given ids are kept
    as ``original_ids``. Duplicate edges collapse into one.

    :param records: VertexRecord sequence, ids arbitrary but unique
    :param successors: mapping from a given id to the given ids it points to
    :returns: Arena
    :raises: DuplicateId
    :raises: DanglingEdge
    :raises: DeadEnd
    """
    index = {}
    for position, record in enumerate(records):
        if record.id in index:
            raise DuplicateId(record.id)
        index[record.id] = position

    dense = []
    for record in records:
        targets = set()
        for target in successors.get(record.id, ()):
            if target not in index:
                raise DanglingEdge(record.id, target)
            targets.add(index[target])
        if not targets:
            raise DeadEnd(record.id)
        dense.append(sorted(targets))

    vertices = [record.with_id(position) for position, record in enumerate(records)]
    return Arena(vertices, dense, original_ids=[record.id for record in records])


def build(owners, colours, successors, names=None):
    """Validate a game given as parallel lists over ids 0..n-1

    :param owners: Player per vertex
    :param colours: colour per vertex
    :param successors: successor ids per vertex
    :param names: optional label per vertex
    :returns: Arena
    """
    names = names or [None] * len(owners)
    records = [VertexRecord(vertex, owner, colour, name)
               for vertex, (owner, colour, name) in enumerate(zip(owners, colours, names))]
    return validate(records, dict(enumerate(successors)))


def witness_length(even_count):
    """floor(log2 e) + 1, and 1 when there is no even vertex"""
    return max(even_count.bit_length(), 1)


def stats(arena):
    """
    :param arena: Arena
    :returns: ArenaStats
    """
    even_count = sum(1 for vertex in arena.vertices if vertex.colour % 2 == 0)
    colours = set(arena.colour_set)
    o_max_dropped = o_min_dropped = False
    if colours:
        top, bottom = max(colours), min(colours)
        o_max_dropped = bool(top % 2)
        o_min_dropped = bool(bottom % 2)
        relevant = colours - {colour for colour in (top, bottom) if colour % 2}
    else:
        relevant = colours
    return ArenaStats(even_count, len(relevant), witness_length(even_count),
                      o_max_dropped, o_min_dropped)


def colour_table(arena, mode):
    """ColourTable for the colours of arena under mode's compression setting"""
    return ColourTable.for_colours(arena.colour_set, compress=mode.compression)


def reverse_play(play):
    """The play read from its last vertex"""
    return list(reversed(play))
