# -*- coding: utf-8 -*-
"""Witness carrying explicit position lists, used to check update rules"""

from ...errors import CertificationBroken
from .witness import Witness


class CertifiedWitness:
    def __init__(self, witness, table, play=(), chains=None, won_chain=None):
        """
        :param witness: the Witness being certified
        :param table: ColourTable decoding the witness
        :param play: colours of the play prefix, positions 0..m-1
        :param chains: dict from entry index i (0 = rightmost) to the 2^i positions
            of its i-witness
        :param won_chain: even chain justifying Won, when witness is Won
        """
        self.witness = witness
        self.table = table
        self.play = tuple(play)
        self.chains = {index: tuple(chain) for index, chain in (chains or {}).items()}
        self.won_chain = tuple(won_chain) if won_chain is not None else None

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    @classmethod
    def start(cls, length, table):
        """Certified bottom witness of the empty play"""
        return cls(Witness.bottom(length), table)

    def even_chain(self):
        """Concatenation of the i-witnesses of even entries, leftmost entry first"""
        if self.witness.is_won:
            return list(self.won_chain)
        chain = []
        for index in sorted(self.chains, reverse=True):
            if self.table.even[self.witness.entry(index)]:
                chain.extend(self.chains[index])
        return chain

    def check(self):
        """Assert every structural property of the certificate

        :raises: CertificationBroken
        """
        if self.witness.is_won:
            self._check_even_chain(self.won_chain)
            if len(self.won_chain) <= 1:
                raise CertificationBroken('Won needs a chain longer than one')
            return
        length = len(self.witness)
        for index in range(length):
            rank = self.witness.entry(index)
            if rank == 0:
                if index in self.chains:
                    raise CertificationBroken('blank entry {} carries positions'.format(index))
                continue
            if index not in self.chains:
                raise CertificationBroken('entry {} has no i-witness'.format(index))
            self._check_i_witness(index, self.chains[index], self.table.unrank(rank))
        indices = sorted(self.chains)
        for lower, upper in zip(indices, indices[1:]):
            if not self.chains[upper][-1] < self.chains[lower][0]:
                raise CertificationBroken(
                    'i-witness {0} does not end before i-witness {1} starts'.format(upper, lower))
        self._check_even_chain(self.even_chain())

    def _check_i_witness(self, index, positions, colour):
        if len(positions) != 2 ** index:
            raise CertificationBroken('i-witness {0} has {1} positions'.format(
                index, len(positions)))
        for position in positions:
            if not 0 <= position < len(self.play):
                raise CertificationBroken('position {} is outside the play'.format(position))
        for first, second in zip(positions, positions[1:]):
            if not first < second:
                raise CertificationBroken('positions {} are not increasing'.format(positions))
        for position in positions[:-1]:
            if self.play[position] % 2:
                raise CertificationBroken('position {} is not even'.format(position))
        self._check_inner_domination(positions)
        last = positions[-1]
        if self.play[last] != colour:
            raise CertificationBroken(
                'entry {0} is {1} but its last position has colour {2}'.format(
                    index, colour, self.play[last]))
        if any(later > colour for later in self.play[last + 1:]):
            raise CertificationBroken('i-witness {} is not outer dominated'.format(index))

    def _check_inner_domination(self, positions):
        for first, second in zip(positions, positions[1:]):
            bound = max(self.play[first], self.play[second])
            if max(self.play[first:second + 1]) > bound:
                raise CertificationBroken(
                    'gap {0}..{1} is not dominated'.format(first, second))

    def _check_even_chain(self, chain):
        for position in chain:
            if self.play[position] % 2:
                raise CertificationBroken('even chain holds odd position {}'.format(position))
        for first, second in zip(chain, chain[1:]):
            if not first < second:
                raise CertificationBroken('even chain {} is not increasing'.format(chain))
        self._check_inner_domination(chain)
