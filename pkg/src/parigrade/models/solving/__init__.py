# -*- coding: utf-8 -*-
"""Solving Models"""

from .progress_measure import ProgressMeasure
from .lift_stats import LiftStats
from .verdict import Verdict, VerdictStatus
from .solution import Solution
