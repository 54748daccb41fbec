# -*- coding: utf-8 -*-
"""Witness model"""

from functools import total_ordering

from ...errors import LengthMismatch
from .colour_table import BLANK

WON_TEXT = 'WON'


@total_ordering
class Witness:
    """Succinct witness b_{L-1} ... b_0, or the top element Won.

    Entries are stored as colour ranks, leftmost (most significant) first, so the
    witness order is tuple order on ``ranks``. Won has ``ranks`` set to None.
    """

    def __init__(self, ranks):
        """
        :param ranks: ranks leftmost first, or None for Won
        """
        self.ranks = None if ranks is None else tuple(ranks)

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __lt__(self, other):
        if not isinstance(other, Witness):
            return NotImplemented
        if self.ranks is None:
            return False
        if other.ranks is None:
            return True
        if len(self.ranks) != len(other.ranks):
            raise LengthMismatch(len(self.ranks), len(other.ranks))
        return self.ranks < other.ranks

    def __hash__(self):
        return hash(self.ranks)

    def __repr__(self):
        if self.ranks is None:
            return 'Witness(WON)'
        return 'Witness({})'.format(self.ranks)

    def __len__(self):
        return 0 if self.ranks is None else len(self.ranks)

    @property
    def is_won(self):
        return self.ranks is None

    def entry(self, index):
        """Rank of b_index, where index 0 is the rightmost entry"""
        return self.ranks[len(self.ranks) - 1 - index]

    def colours(self, table):
        """Entries leftmost first as natural colours; None marks a blank"""
        return [table.unrank(rank) for rank in self.ranks]

    def to_string(self, table):
        """Debug form: entries left to right, comma separated, '_' for blank"""
        if self.ranks is None:
            return WON_TEXT
        return ','.join(table.to_string(rank) for rank in self.ranks)

    @classmethod
    def bottom(cls, length):
        return cls((0,) * length)

    @classmethod
    def from_colours(cls, entries, table):
        """Alternate constructor used for natural colours given leftmost first

        :param entries: colours or None / '_' for blanks
        :param table: ColourTable every colour must belong to
        :raises: ValueError when non-blank entries increase left to right
        :raises: UnknownColour
        """
        ranks = tuple(table.rank(entry) for entry in entries)
        bound = None
        for rank in ranks:
            value = table.unrank(rank)
            if value is None:
                continue
            if bound is not None and value > bound:
                raise ValueError('witness entries must be non-increasing, got {}'.format(
                    list(entries)))
            bound = value
        return cls(ranks)

    @classmethod
    def from_string(cls, text, table):
        """Alternate constructor used for the debug form"""
        text = text.strip()
        if text == WON_TEXT:
            return WON
        return cls.from_colours(
            [None if part.strip() == BLANK else int(part) for part in text.split(',')], table)


WON = Witness(None)
