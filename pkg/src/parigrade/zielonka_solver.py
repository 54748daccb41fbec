# -*- coding: utf-8 -*-
"""Client for the recursive solver"""

from .basesolver import BaseSolver
from .baseline import zielonka
from .models.solving import LiftStats, Solution


class ZielonkaSolver(BaseSolver):
    """Solves games with the recursive attractor decomposition"""

    algorithm = 'zielonka'

    def _solve(self, arena):
        regions = zielonka(arena, timeout=self.timeout)
        return Solution(regions, stats=LiftStats([0] * arena.n), algorithm=self.algorithm)
