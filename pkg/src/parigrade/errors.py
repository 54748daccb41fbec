# -*- coding: utf-8 -*-
"""Exceptions raised by parigrade"""


class ParigradeError(Exception):
    """Base for every error raised by parigrade"""


class ArenaError(ParigradeError, ValueError):
    """Raised when a game graph violates the arena invariants"""


class DeadEnd(ArenaError):
    def __init__(self, vertex):
        """
        :param vertex: id of the vertex without successors
        """
        ArenaError.__init__(self, 'vertex {} has no successor'.format(vertex))
        self.vertex = vertex


class DanglingEdge(ArenaError):
    def __init__(self, source, target):
        """
        :param source: id of the vertex the edge leaves
        :param target: unknown id the edge points to
        """
        ArenaError.__init__(
            self, 'edge {0} -> {1} targets an unknown vertex'.format(source, target))
        self.source = source
        self.target = target


class DuplicateId(ArenaError):
    def __init__(self, vertex):
        ArenaError.__init__(self, 'vertex id {} is declared twice'.format(vertex))
        self.vertex = vertex


class PgSyntaxError(ParigradeError, ValueError):
    def __init__(self, line, column, expected, found=None):
        """
        :param line: 1-based line of the offending token
        :param column: 1-based column of the offending token
        :param expected: description of what the grammar allows here
        :param found: text actually found, if any
        """
        message = '{0}:{1}: expected {2}'.format(line, column, expected)
        if found is not None:
            message += ', found {!r}'.format(found)
        ParigradeError.__init__(self, message)
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found


class OwnerOutOfRange(PgSyntaxError):
    def __init__(self, line, column, owner):
        PgSyntaxError.__init__(self, line, column, 'owner 0 or 1', str(owner))
        self.owner = owner


class InvalidSpec(ParigradeError, ValueError):
    """Raised for generator parameters outside their documented ranges"""


class WitnessError(ParigradeError):
    """Base for misuse of witness operations"""


class UnknownColour(WitnessError, ValueError):
    def __init__(self, colour):
        WitnessError.__init__(self, 'colour {} is not representable'.format(colour))
        self.colour = colour


class LengthMismatch(WitnessError, ValueError):
    def __init__(self, left, right):
        WitnessError.__init__(
            self, 'cannot compare witnesses of length {0} and {1}'.format(left, right))


class ValOfWon(WitnessError, ValueError):
    def __init__(self):
        WitnessError.__init__(self, 'val is undefined on Won')


class XOdd(WitnessError, ValueError):
    def __init__(self, x):
        WitnessError.__init__(self, 'truncation colour must be even, got {}'.format(x))
        self.x = x


class CertificationBroken(ParigradeError, AssertionError):
    """Raised when a certified witness loses one of its structural properties"""


class BoundViolated(ParigradeError, AssertionError):
    """Raised when lifting exceeds the |V| * |W| bound"""


class MalformedInput(ParigradeError, ValueError):
    """Raised when a claimed solution is not even shaped like one"""


class SolveTimeout(ParigradeError):
    def __init__(self, seconds):
        ParigradeError.__init__(self, 'solve exceeded {} seconds'.format(seconds))
        self.seconds = seconds
