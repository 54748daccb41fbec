# -*- coding: utf-8 -*-
"""Lift statistics model"""


class LiftStats:
    def __init__(self, lifts_per_vertex=None, pushes=0, wall_time=0.0, bound=None):
        """
        :param lifts_per_vertex: list with the number of lifts applied to each vertex
        :param pushes: number of worklist insertions
        :param wall_time: seconds spent solving
        :param bound: |V| * |W| upper limit on the total number of lifts
        """
        self.lifts_per_vertex = list(lifts_per_vertex or [])
        self.pushes = pushes
        self.wall_time = wall_time
        self.bound = bound

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'LiftStats(lifts={0}, pushes={1}, wall_time={2:.4f})'.format(
            self.total_lifts, self.pushes, self.wall_time)

    @property
    def total_lifts(self):
        return sum(self.lifts_per_vertex)

    @property
    def max_vertex_lifts(self):
        return max(self.lifts_per_vertex, default=0)

    def to_dict(self):
        return {
            'total_lifts': self.total_lifts,
            'max_vertex_lifts': self.max_vertex_lifts,
            'pushes': self.pushes,
            'wall_time': self.wall_time
        }
