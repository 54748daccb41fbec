# -*- coding: utf-8 -*-
"""Positional strategy model"""

from ...errors import MalformedInput


class Strategy:
    def __init__(self, player, choice=None):
        """
        :param player: Player this strategy plays for
        :param choice: dict mapping a vertex to its chosen successor
        """
        self.player = player
        self.choice = dict(choice or {})

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'Strategy({0}, {1})'.format(self.player, self.choice)

    def __contains__(self, vertex):
        return vertex in self.choice

    def __len__(self):
        return len(self.choice)

    def get(self, vertex):
        return self.choice.get(vertex)

    def restricted_to(self, region):
        """Copy keeping only choices made inside region"""
        return Strategy(self.player, {
            vertex: target for vertex, target in self.choice.items() if vertex in region})

    def check_edges(self, arena):
        """Ensure every choice is a vertex owned by the player moving along an edge

        :raises: MalformedInput
        """
        for vertex, target in self.choice.items():
            if not 0 <= vertex < arena.n:
                raise MalformedInput('strategy names unknown vertex {}'.format(vertex))
            if arena.owner(vertex) is not self.player:
                raise MalformedInput('vertex {0} is not owned by {1}'.format(vertex, self.player))
            if not arena.has_edge(vertex, target):
                raise MalformedInput('{0} -> {1} is not an edge'.format(vertex, target))
