# -*- coding: utf-8 -*-
"""Game texts and generators reused across tests"""

import numpy as np
from hypothesis import strategies as st
from src.parigrade.arena import build
from src.parigrade.errors import DanglingEdge, DuplicateId, OwnerOutOfRange, PgSyntaxError
from src.parigrade.models import GeneratorSpec, Player
from src.parigrade.pgio import gen_random

RING_TWO_TEXT = (
    'parity 4;\n'
    '1 1 1 2;\n'
    '2 2 1 1,3;\n'
    '3 3 1 4;\n'
    '4 4 1 1;\n'
)

RING_TWO_SOLUTION = (
    'paritysol 4;\n'
    '1 0;\n'
    '2 0;\n'
    '3 0;\n'
    '4 0;\n'
)


def get_malformed_cases(names):
    return [MALFORMED.get(name) for name in names]


# text, error type, (line, column) of the offending token or None for arena errors
MALFORMED = {
    'bad-priority': ('0 x 0 0;\n', PgSyntaxError, (1, 3)),
    'owner-out-of-range': ('parity 1;\n0 2 2 1;\n1 1 0 0;\n', OwnerOutOfRange, (2, 5)),
    'missing-semicolon': ('0 2 0 1\n1 1 1 0;\n', PgSyntaxError, (2, 1)),
    'id-above-header': ('parity 1;\n0 2 0 2;\n2 1 1 0;\n', PgSyntaxError, (3, 1)),
    'unterminated-name': ('0 2 0 0 "loop;\n', PgSyntaxError, (1, 9)),
    'dangling-edge': ('0 2 0 5;\n', DanglingEdge, None),
    'duplicate-id': ('0 2 0 0;\n0 1 1 0;\n', DuplicateId, None)
}


@st.composite
def small_arenas(draw, max_vertices=4, max_colour=3, max_outdeg=2):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    owners = draw(st.lists(st.sampled_from(list(Player)), min_size=n, max_size=n))
    colours = draw(st.lists(st.integers(min_value=1, max_value=max_colour),
                            min_size=n, max_size=n))
    successors = draw(st.lists(
        st.sets(st.integers(min_value=0, max_value=n - 1), min_size=1, max_size=max_outdeg),
        min_size=n, max_size=n))
    return build(owners, colours, [sorted(targets) for targets in successors])


def random_plays(count, steps, seed=0):
    """Seeded walks through small random arenas.

    :returns: iterator of (arena, colours of the visited vertices)
    """
    rng = np.random.default_rng(seed)
    for index in range(count):
        arena = gen_random(GeneratorSpec.random(8, 1, 3, 6, seed + index))
        vertex = int(rng.integers(arena.n))
        colours = []
        for _ in range(steps):
            colours.append(arena.colour(vertex))
            successors = arena.successors[vertex]
            vertex = successors[int(rng.integers(len(successors)))]
        yield arena, colours
