# -*- coding: utf-8 -*-
"""Models"""

from .game import Player, VertexRecord, Arena, ArenaStats, Strategy, RegionPair
from .witness import Ordering, RuleVariant, UpdateMode, ColourTable, Witness, WON, \
    CertifiedWitness
from .solving import ProgressMeasure, LiftStats, Verdict, VerdictStatus, Solution
from .io import GeneratorFamily, GeneratorSpec, SolutionDocument
from .harness import Algorithm, RunConfig, BenchReport, BenchRow, SimStep, SimTrace
