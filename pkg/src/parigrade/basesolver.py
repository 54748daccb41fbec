# -*- coding: utf-8 -*-
"""Common front for the solving algorithms"""

import logging
import time

from .baseline import verify_solution
from .models.witness import UpdateMode

logger = logging.getLogger(__name__)


class BaseSolver:
    """Base for solvers that time a run and optionally verify what it returns"""

    algorithm = None

    def __init__(self, mode=None, verify=True, timeout=None):
        """Constructor

        :param mode: UpdateMode the witness rules run under
        :param verify: check both strategies after solving
        :param timeout: wall-clock limit in seconds
        """
        if timeout is not None and timeout <= 0:
            raise ValueError('timeout must be positive')

        self.mode = mode if mode is not None else UpdateMode()
        self.verify = verify
        self.timeout = timeout

    def solve(self, arena):
        """Solve arena and, unless disabled, verify the result.

        :param arena: Arena
        :returns: Solution
        :raises: SolveTimeout
        """
        started = time.monotonic()
        solution = self._solve(arena)
        solution.algorithm = self.algorithm
        if self.verify:
            solution.verdict = verify_solution(arena, solution.regions)
            if not solution.verdict:
                solution = self._repair(arena, solution)
            if not solution.verdict:
                logger.warning('%s solution failed verification: %s', self.algorithm,
                               solution.verdict)
        if solution.stats is not None:
            solution.stats.wall_time = time.monotonic() - started
        return solution

    def _solve(self, arena):
        raise NotImplementedError

    def _repair(self, arena, solution):
        """Hook for a second attempt once verification failed"""
        return solution
