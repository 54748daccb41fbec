# -*- coding: utf-8 -*-
"""Rank encoding of the colour order"""

from ...errors import UnknownColour

BLANK = '_'


def colour_key(colour):
    """Sort key realising the colour order: blank, then odd colours from the
    largest down, then even colours from the smallest up.

    :param colour: natural colour, or None for the blank entry
    """
    if colour is None:
        return (0, 0)
    if colour % 2:
        return (1, -colour)
    return (2, colour)


class ColourTable:
    """Maps the colours a witness may hold to ordinal ranks.

    Rank 0 is the blank entry; rank comparison is exactly the colour order, so
    witnesses stored as rank tuples compare with plain tuple comparison.
    """

    def __init__(self, colours, o_max=None, o_min=None):
        """
        :param colours: representable colours
        :param o_max: the game's top colour when it is odd
        :param o_min: the game's bottom colour when it is odd
        """
        ordered = sorted(set(colours), key=colour_key)
        self.colours = tuple(ordered)
        self.values = (None,) + self.colours
        self.even = tuple(value is not None and value % 2 == 0 for value in self.values)
        self.least_even = next((colour for colour in self.colours if colour % 2 == 0), None)
        self.o_max = o_max
        self.o_min = o_min
        self._ranks = {colour: rank for rank, colour in enumerate(self.values)}

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'ColourTable({})'.format(list(self.colours))

    def __len__(self):
        return len(self.values)

    def __contains__(self, colour):
        return colour in self._ranks

    @property
    def width(self):
        """Number of representable colours, blank excluded"""
        return len(self.colours)

    @classmethod
    def for_colours(cls, colour_set, compress=False):
        """Alternate constructor used for a game's colour set

        :param colour_set: colours present in the game
        :param compress: leave an odd top and an odd bottom colour out
        """
        colour_set = sorted(set(colour_set))
        if not colour_set:
            return cls([])
        top, bottom = colour_set[-1], colour_set[0]
        o_max = top if top % 2 else None
        o_min = bottom if bottom % 2 else None
        if compress:
            colour_set = [colour for colour in colour_set if colour not in (o_max, o_min)]
        return cls(colour_set, o_max=o_max, o_min=o_min)

    def rank(self, colour):
        """
        :param colour: natural colour, None or '_' for blank
        :raises: UnknownColour
        """
        if colour == BLANK:
            colour = None
        try:
            return self._ranks[colour]
        except KeyError:
            raise UnknownColour(colour)

    def unrank(self, rank):
        """Colour of a rank; None is the blank entry"""
        return self.values[rank]

    def to_string(self, rank):
        value = self.values[rank]
        return BLANK if value is None else str(value)
