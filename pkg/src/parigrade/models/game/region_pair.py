# -*- coding: utf-8 -*-
"""Winning regions model"""

from .player import Player
from .strategy import Strategy


class RegionPair:
    def __init__(self, even_region, odd_region, even_strategy=None, odd_strategy=None):
        """
        :param even_region: vertices won by Even
        :param odd_region: vertices won by Odd
        :param even_strategy: optional Strategy for Even on her region
        :param odd_strategy: optional Strategy for Odd on his region
        """
        self.even_region = frozenset(even_region)
        self.odd_region = frozenset(odd_region)
        self.even_strategy = even_strategy if even_strategy is not None \
            else Strategy(Player.EVEN)
        self.odd_strategy = odd_strategy if odd_strategy is not None \
            else Strategy(Player.ODD)

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'RegionPair(even={0}, odd={1})'.format(
            sorted(self.even_region), sorted(self.odd_region))

    def region(self, player):
        return self.even_region if player is Player.EVEN else self.odd_region

    def strategy(self, player):
        return self.even_strategy if player is Player.EVEN else self.odd_strategy

    def winner(self, vertex):
        return Player.EVEN if vertex in self.even_region else Player.ODD

    def winners(self, n):
        """Winner of each vertex 0..n-1"""
        return [self.winner(vertex) for vertex in range(n)]

    def same_regions(self, other):
        return self.even_region == other.even_region and self.odd_region == other.odd_region
