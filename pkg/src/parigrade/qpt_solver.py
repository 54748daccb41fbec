# -*- coding: utf-8 -*-
"""Client for the value-iteration solver"""

import logging

from .basesolver import BaseSolver
from .baseline import verify_solution, zielonka
from .models.game import RegionPair
from .solver import solve

logger = logging.getLogger(__name__)


class QptSolver(BaseSolver):
    """Solves games by lifting succinct witnesses to their least fixpoint.

    When verification rejects the solution, Even's strategy is recomputed by the
    recursive solver on her winning region and the solution is verified again.
    """

    algorithm = 'qpt'

    def __init__(self, mode=None, verify=True, timeout=None, edge_cache=False, trace=None,
                 order_seed=None):
        """Constructor

        :param mode: UpdateMode the witness rules run under
        :param verify: check both strategies after solving
        :param timeout: wall-clock limit in seconds
        :param edge_cache: reuse per-edge updates while the successor is unchanged
        :param trace: optional callable(vertex, old, new) invoked on every lift
        :param order_seed: seed for a shuffled worklist order
        """
        BaseSolver.__init__(self, mode, verify, timeout)
        self.edge_cache = edge_cache
        self.trace = trace
        self.order_seed = order_seed

    def _solve(self, arena):
        return solve(arena, self.mode, edge_cache=self.edge_cache, timeout=self.timeout,
                     order_seed=self.order_seed, trace=self.trace)

    def _repair(self, arena, solution):
        logger.warning('extracted strategies failed verification (%s), '
                       'recomputing the strategy of even', solution.verdict)
        fallback = zielonka(arena, region=solution.even_region, timeout=self.timeout)
        solution.regions = RegionPair(solution.even_region, solution.odd_region,
                                      fallback.even_strategy, solution.regions.odd_strategy)
        solution.fallback_used = True
        solution.verdict = verify_solution(arena, solution.regions)
        return solution
