# -*- coding: utf-8 -*-
"""Game generator parameters"""

from enum import Enum

from ...errors import InvalidSpec


class GeneratorFamily(Enum):
    RING = 'ring'
    RANDOM = 'random'

    @classmethod
    def from_string(cls, family):
        return cls(family.lower())

    def __str__(self):
        return self.value


class GeneratorSpec:
    def __init__(self, family, n, min_outdeg=None, max_outdeg=None, max_colour=None,
                 seed=None):
        """
        :param family: GeneratorFamily
        :param n: ring half size, or vertex count of a random game
        :param min_outdeg: smallest out-degree of a random game
        :param max_outdeg: largest out-degree of a random game
        :param max_colour: colours of a random game are drawn from 1..max_colour
        :param seed: seed of a random game
        :raises: InvalidSpec
        """
        self.family = family
        self.n = n
        self.min_outdeg = min_outdeg
        self.max_outdeg = max_outdeg
        self.max_colour = max_colour
        self.seed = seed
        self.validate()

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'GeneratorSpec({})'.format(self.describe())

    @classmethod
    def ring(cls, n):
        return cls(GeneratorFamily.RING, n)

    @classmethod
    def random(cls, n, min_outdeg, max_outdeg, max_colour, seed):
        return cls(GeneratorFamily.RANDOM, n, min_outdeg, max_outdeg, max_colour, seed)

    @classmethod
    def from_tokens(cls, tokens):
        """Alternate constructor used for manifest lines and command arguments,
        e.g. ``['ring', '3']`` or ``['random', '100', '1', '6', '6', '7']``

        :raises: InvalidSpec
        """
        if not tokens:
            raise InvalidSpec('empty generator description')
        try:
            family = GeneratorFamily.from_string(tokens[0])
            numbers = [int(token) for token in tokens[1:]]
        except ValueError:
            raise InvalidSpec('cannot read generator description {!r}'.format(' '.join(tokens)))
        expected = 1 if family is GeneratorFamily.RING else 5
        if len(numbers) != expected:
            raise InvalidSpec('{0} takes {1} numbers, got {2}'.format(
                family, expected, len(numbers)))
        if family is GeneratorFamily.RING:
            return cls.ring(*numbers)
        return cls.random(*numbers)

    def validate(self):
        if self.n is None or self.n < 1:
            raise InvalidSpec('n must be at least 1')
        if self.family is GeneratorFamily.RING:
            return
        if self.min_outdeg is None or self.max_outdeg is None:
            raise InvalidSpec('out-degree bounds must be provided')
        if not 1 <= self.min_outdeg <= self.max_outdeg <= self.n:
            raise InvalidSpec('out-degrees must satisfy 1 <= min <= max <= n')
        if self.max_colour is None or self.max_colour < 1:
            raise InvalidSpec('max_colour must be at least 1')
        if self.seed is None or self.seed < 0:
            raise InvalidSpec('seed must be a non-negative integer')

    def describe(self):
        """Short name usable as a benchmark instance label"""
        if self.family is GeneratorFamily.RING:
            return 'ring-{}'.format(self.n)
        return 'random-{0}-{1}-{2}-{3}-{4}'.format(
            self.n, self.min_outdeg, self.max_outdeg, self.max_colour, self.seed)
