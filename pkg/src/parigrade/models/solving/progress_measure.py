# -*- coding: utf-8 -*-
"""Progress measure model"""

from ..witness import Witness


class ProgressMeasure:
    """Witness per vertex, plus a generation counter bumped on every change"""

    def __init__(self, witnesses):
        """
        :param witnesses: initial Witness per vertex
        """
        self.witnesses = list(witnesses)
        self.generations = [0] * len(self.witnesses)

    def __eq__(self, other):
        """Measures are equal when they map every vertex to the same witness"""
        if isinstance(other, self.__class__):
            return self.witnesses == other.witnesses
        return False

    def __len__(self):
        return len(self.witnesses)

    def __getitem__(self, vertex):
        return self.witnesses[vertex]

    def __repr__(self):
        return 'ProgressMeasure({})'.format(self.witnesses)

    @classmethod
    def bottom(cls, n, length):
        """Alternate constructor mapping every vertex to the blank witness"""
        return cls([Witness.bottom(length)] * n)

    def lift(self, vertex, witness):
        """Store a strictly larger witness for vertex"""
        if not witness > self.witnesses[vertex]:
            raise ValueError('lift must strictly increase the witness of {}'.format(vertex))
        self.witnesses[vertex] = witness
        self.generations[vertex] += 1

    def won(self):
        """Vertices whose witness is Won"""
        return {vertex for vertex, witness in enumerate(self.witnesses) if witness.is_won}

    def to_strings(self, table):
        return [witness.to_string(table) for witness in self.witnesses]
