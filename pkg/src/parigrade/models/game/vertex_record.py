# -*- coding: utf-8 -*-
"""Vertex model"""

from .player import Player


class VertexRecord:
    def __init__(self, id_, owner, colour, name=None):
        """
        :param id_: vertex id; dense once the vertex belongs to an Arena
        :param owner: Player moving from this vertex
        :param colour: non-negative colour (PGSolver priority)
        :param name: optional label
        """
        if not isinstance(owner, Player):
            raise ValueError('owner must be a Player')
        if colour < 0:
            raise ValueError('colour must be non-negative')

        self.id = id_
        self.owner = owner
        self.colour = colour
        self.name = name

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'VertexRecord({0}, {1}, {2}, {3!r})'.format(
            self.id, self.owner, self.colour, self.name)

    def with_id(self, id_):
        """Copy of this record under another id"""
        return VertexRecord(id_, self.owner, self.colour, self.name)
