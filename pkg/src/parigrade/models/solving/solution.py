# -*- coding: utf-8 -*-
"""Solution model"""


class Solution:
    def __init__(self, regions, measure=None, table=None, stats=None, verdict=None,
                 algorithm='qpt', fallback_used=False):
        """
        :param regions: RegionPair with both strategies
        :param measure: ProgressMeasure at the fixpoint, absent for recursive solving
        :param table: ColourTable the measure is encoded with
        :param stats: LiftStats
        :param verdict: Verdict, when the solution was verified
        :param algorithm: name of the algorithm that produced it
        :param fallback_used: whether Even's strategy came from the recursive solver
        """
        self.regions = regions
        self.measure = measure
        self.table = table
        self.stats = stats
        self.verdict = verdict
        self.algorithm = algorithm
        self.fallback_used = fallback_used

    def __repr__(self):
        return 'Solution({0}, {1})'.format(self.algorithm, self.regions)

    @property
    def even_region(self):
        return self.regions.even_region

    @property
    def odd_region(self):
        return self.regions.odd_region

    def winner(self, vertex):
        return self.regions.winner(vertex)
