# -*- coding: utf-8 -*-
"""Serialisable view of a solution"""

from ..game import Player, RegionPair, Strategy


class SolutionDocument:
    def __init__(self, winners, strategy=None, stats=None, original_ids=None):
        """
        :param winners: Player per dense vertex
        :param strategy: chosen dense successor per vertex, None where no choice is made
        :param stats: optional dict of lift statistics
        :param original_ids: id each dense vertex had in the game file
        """
        self.winners = list(winners)
        self.strategy = list(strategy) if strategy is not None else [None] * len(self.winners)
        self.stats = stats
        self.original_ids = list(original_ids) if original_ids is not None \
            else list(range(len(self.winners)))

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __len__(self):
        return len(self.winners)

    def __repr__(self):
        return 'SolutionDocument(winners={})'.format([w.value for w in self.winners])

    @classmethod
    def from_solution(cls, solution, arena):
        """Alternate constructor used for a Solution over arena

        Each vertex carries the choice of its owner when its owner wins it.
        """
        regions = solution.regions
        winners = regions.winners(arena.n)
        strategy = []
        for vertex, winner in enumerate(winners):
            choice = None
            if arena.owner(vertex) is winner:
                choice = regions.strategy(winner).get(vertex)
            strategy.append(choice)
        stats = solution.stats.to_dict() if solution.stats is not None else None
        return cls(winners, strategy, stats, arena.original_ids)

    def region(self, player):
        return {vertex for vertex, winner in enumerate(self.winners) if winner is player}

    def to_regions(self, arena):
        """RegionPair claimed by this document; each choice goes to the owner of its vertex"""
        choices = {Player.EVEN: {}, Player.ODD: {}}
        for vertex, choice in enumerate(self.strategy):
            if choice is not None:
                choices[arena.owner(vertex)][vertex] = choice
        return RegionPair(self.region(Player.EVEN), self.region(Player.ODD),
                          Strategy(Player.EVEN, choices[Player.EVEN]),
                          Strategy(Player.ODD, choices[Player.ODD]))

    def to_dict(self):
        return {
            'winners': [winner.value for winner in self.winners],
            'strategy': self.strategy,
            'original_ids': self.original_ids,
            'stats': self.stats
        }

    @classmethod
    def from_dict(cls, document):
        """Alternate constructor used for the dictionary ``to_dict`` returns"""
        return cls(
            [Player(winner) for winner in document['winners']],
            document.get('strategy'),
            document.get('stats'),
            document.get('original_ids')
        )
