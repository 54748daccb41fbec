# -*- coding: utf-8 -*-
"""Enum for the two players"""

from enum import Enum


class Player(Enum):
    EVEN = 0
    ODD = 1

    @property
    def opponent(self):
        return Player(1 - self.value)

    @classmethod
    def from_string(cls, player):
        return cls[player.upper()]

    @classmethod
    def of_colour(cls, colour):
        """Player favoured by a colour: Even for even colours, Odd otherwise"""
        return cls(colour % 2)

    def __str__(self):
        return self.name.lower()
