# -*- coding: utf-8 -*-
"""PGSolver game and solution formats, and seeded game generators.

Game files::

    parity <max-id>;
    <id> <priority> <owner> <succ>,<succ>,... ["name"];

Solution files::

    paritysol <max-id>;
    <id> <winner> [<succ>];

Whitespace (line breaks included) may separate any two tokens, so several records
can share a line. Ids may be sparse; vertices are numbered densely in declaration
order and their file ids kept as ``Arena.original_ids``.
"""

import logging

import numpy as np

from .arena import validate
from .errors import MalformedInput, OwnerOutOfRange, PgSyntaxError
from .models.game import Player, VertexRecord
from .models.io import GeneratorFamily, SolutionDocument

logger = logging.getLogger(__name__)

GAME_HEADER = 'parity'
SOLUTION_HEADER = 'paritysol'


class _Scanner:
    """Character cursor tracking 1-based line and column"""

    def __init__(self, text):
        self.text = text
        self.offset = 0
        self.line = 1
        self.column = 1

    def _advance(self):
        if self.text[self.offset] == '\n':
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        self.offset += 1

    def skip_whitespace(self):
        while self.offset < len(self.text) and self.text[self.offset].isspace():
            self._advance()

    def at_end(self):
        self.skip_whitespace()
        return self.offset >= len(self.text)

    def peek(self):
        self.skip_whitespace()
        return self.text[self.offset] if self.offset < len(self.text) else None

    def error(self, expected):
        found = self.peek()
        return PgSyntaxError(self.line, self.column, expected,
                             'end of input' if found is None else found)

    def word(self):
        """Run of non-space characters that are not punctuation"""
        self.skip_whitespace()
        start = self.offset
        while self.offset < len(self.text) and not self.text[self.offset].isspace() \
                and self.text[self.offset] not in ',;"':
            self._advance()
        return self.text[start:self.offset]

    def expect_keyword(self, keyword):
        line, column = self._position()
        word = self.word()
        if word != keyword:
            raise PgSyntaxError(line, column, repr(keyword), word or self.peek() or 'end of input')

    def expect_int(self, expected):
        line, column = self._position()
        word = self.word()
        if not (word.isdecimal() and word.isascii()):
            raise PgSyntaxError(line, column, expected,
                                word or self.peek() or 'end of input')
        return int(word), line, column

    def accept(self, char):
        if self.peek() == char:
            self._advance()
            return True
        return False

    def expect(self, char):
        if not self.accept(char):
            raise self.error(repr(char))

    def quoted(self):
        line, column = self._position()
        self.expect('"')
        start = self.offset
        while self.offset < len(self.text) and self.text[self.offset] != '"':
            self._advance()
        if self.offset >= len(self.text):
            raise PgSyntaxError(line, column, 'closing \'"\'', 'end of input')
        name = self.text[start:self.offset]
        self._advance()
        return name

    def _position(self):
        self.skip_whitespace()
        return self.line, self.column


def _check_max_id(max_id, vertex_id, line, column):
    if max_id is not None and vertex_id > max_id:
        raise PgSyntaxError(line, column, 'id at most {}'.format(max_id), str(vertex_id))


def parse_pgsolver(text):
    """Read a game in PGSolver format.

    :param text: file contents
    :returns: Arena
    :raises: PgSyntaxError
    :raises: OwnerOutOfRange
    :raises: ArenaError from validation (DeadEnd, DanglingEdge, DuplicateId)
    """
    scanner = _Scanner(text)
    max_id = None
    if scanner.peek() is not None and scanner.text.startswith(GAME_HEADER, scanner.offset):
        scanner.expect_keyword(GAME_HEADER)
        max_id, _, _ = scanner.expect_int('maximal vertex id')
        scanner.expect(';')

    records = []
    successors = {}
    while not scanner.at_end():
        vertex_id, line, column = scanner.expect_int('vertex id')
        _check_max_id(max_id, vertex_id, line, column)
        colour, _, _ = scanner.expect_int('priority')
        owner, line, column = scanner.expect_int('owner')
        if owner not in (0, 1):
            raise OwnerOutOfRange(line, column, owner)
        targets = [scanner.expect_int('successor id')[0]]
        while scanner.accept(','):
            targets.append(scanner.expect_int('successor id')[0])
        name = scanner.quoted() if scanner.peek() == '"' else None
        scanner.expect(';')
        records.append(VertexRecord(vertex_id, Player(owner), colour, name))
        successors.setdefault(vertex_id, targets)

    arena = validate(records, successors)
    logger.debug('parsed game with %d vertices and %d edges', arena.n, arena.m)
    return arena


def load_game(path):
    """Read and parse a PGSolver game file"""
    with open(path, encoding='utf-8') as handle:
        return parse_pgsolver(handle.read())


def emit_pgsolver(arena):
    """Write arena in PGSolver format under its original ids, records and successor
    lists in ascending id order

    :returns: text ending with a newline
    """
    ids = arena.original_ids
    lines = ['{0} {1};'.format(GAME_HEADER, max(ids, default=0))]
    for vertex in sorted(arena.vertices, key=lambda vertex: ids[vertex.id]):
        targets = sorted(ids[target] for target in arena.successors[vertex.id])
        record = '{0} {1} {2} {3}'.format(
            ids[vertex.id], vertex.colour, vertex.owner.value, ','.join(map(str, targets)))
        if vertex.name:
            record += ' "{}"'.format(vertex.name)
        lines.append(record + ';')
    return '\n'.join(lines) + '\n'


def gen_ring(n):
    """Ring of 2n vertices owned by Odd where vertex i has colour i.

    Every vertex moves to the next one, the last back to 1, and every even vertex
    may also return to 1. Vertices keep the ids 1..2n.

    :param n: half the number of vertices, at least 1
    :returns: Arena
    """
    if n < 1:
        raise ValueError('n must be at least 1')
    size = 2 * n
    records = [VertexRecord(vertex, Player.ODD, vertex) for vertex in range(1, size + 1)]
    successors = {vertex: [vertex + 1] for vertex in range(1, size)}
    successors[size] = [1]
    for vertex in range(2, size + 1, 2):
        successors[vertex].append(1)
    return validate(records, successors)


def gen_random(spec):
    """Random game as a pure function of spec.

    All draws come from one ``numpy.random.default_rng(seed)``; for each vertex in id
    order it draws the owner, the colour in 1..max_colour, the out-degree and then
    the successors without replacement.

    :param spec: GeneratorSpec of the random family
    :returns: Arena over ids 0..n-1
    """
    rng = np.random.default_rng(spec.seed)
    records = []
    successors = {}
    for vertex in range(spec.n):
        owner = Player(int(rng.integers(0, 2)))
        colour = int(rng.integers(1, spec.max_colour + 1))
        degree = int(rng.integers(spec.min_outdeg, spec.max_outdeg + 1))
        targets = rng.choice(spec.n, size=degree, replace=False)
        records.append(VertexRecord(vertex, owner, colour))
        successors[vertex] = sorted(int(target) for target in targets)
    return validate(records, successors)


def generate(spec):
    """Arena for any GeneratorSpec"""
    if spec.family is GeneratorFamily.RING:
        return gen_ring(spec.n)
    return gen_random(spec)


def emit_solution(document):
    """Write a SolutionDocument, one line per vertex ordered by original id"""
    ids = document.original_ids
    lines = ['{0} {1};'.format(SOLUTION_HEADER, max(ids, default=0))]
    for vertex in sorted(range(len(document)), key=lambda v: ids[v]):
        line = '{0} {1}'.format(ids[vertex], document.winners[vertex].value)
        choice = document.strategy[vertex]
        if choice is not None:
            line += ' {}'.format(ids[choice])
        lines.append(line + ';')
    return '\n'.join(lines) + '\n'


def parse_solution(text, arena):
    """Read a solution for arena back.

    :returns: SolutionDocument over arena's dense ids
    :raises: PgSyntaxError
    :raises: MalformedInput when ids are unknown, repeated or missing
    """
    dense = {original: vertex for vertex, original in enumerate(arena.original_ids)}
    scanner = _Scanner(text)
    scanner.expect_keyword(SOLUTION_HEADER)
    scanner.expect_int('maximal vertex id')
    scanner.expect(';')

    winners = [None] * arena.n
    strategy = [None] * arena.n
    while not scanner.at_end():
        original, _, _ = scanner.expect_int('vertex id')
        winner, line, column = scanner.expect_int('winner')
        if winner not in (0, 1):
            raise PgSyntaxError(line, column, 'winner 0 or 1', str(winner))
        choice = None
        if scanner.peek() != ';':
            choice, _, _ = scanner.expect_int('strategy successor')
        scanner.expect(';')
        if original not in dense:
            raise MalformedInput('solution names unknown vertex {}'.format(original))
        vertex = dense[original]
        if winners[vertex] is not None:
            raise MalformedInput('vertex {} is listed twice'.format(original))
        winners[vertex] = Player(winner)
        if choice is not None:
            if choice not in dense:
                raise MalformedInput('strategy of {0} names unknown vertex {1}'.format(
                    original, choice))
            strategy[vertex] = dense[choice]

    missing = [arena.original_ids[v] for v, winner in enumerate(winners) if winner is None]
    if missing:
        raise MalformedInput('solution has no winner for vertices {}'.format(missing))
    return SolutionDocument(winners, strategy, original_ids=arena.original_ids)
