# -*- coding: utf-8 -*-
"""Arena statistics model"""


class ArenaStats:
    def __init__(self, even_count, relevant_colours, witness_length,
                 o_max_dropped=False, o_min_dropped=False):
        """
        :param even_count: number of vertices with an even colour (e)
        :param relevant_colours: colour count without an odd top or odd bottom colour (r)
        :param witness_length: number of witness entries (L)
        :param o_max_dropped: whether the top colour is odd and was discounted
        :param o_min_dropped: whether the bottom colour is odd and was discounted
        """
        self.even_count = even_count
        self.relevant_colours = relevant_colours
        self.witness_length = witness_length
        self.o_max_dropped = o_max_dropped
        self.o_min_dropped = o_min_dropped

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'ArenaStats(e={0}, r={1}, L={2})'.format(
            self.even_count, self.relevant_colours, self.witness_length)

    def to_dict(self):
        """Returns the statistics as a plain dictionary"""
        return {
            'e': self.even_count,
            'r': self.relevant_colours,
            'L': self.witness_length,
            'o_max_dropped': self.o_max_dropped,
            'o_min_dropped': self.o_min_dropped
        }
