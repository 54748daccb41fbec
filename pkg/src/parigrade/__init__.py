# -*- coding: utf-8 -*-
"""Top-level package for parigrade"""

__version__ = '0.1.0'

from .models import Player, VertexRecord, Arena, ArenaStats, Strategy, RegionPair, \
    Ordering, RuleVariant, UpdateMode, ColourTable, Witness, WON, CertifiedWitness, \
    ProgressMeasure, LiftStats, Verdict, VerdictStatus, Solution, GeneratorFamily, \
    GeneratorSpec, SolutionDocument, Algorithm, RunConfig, BenchReport, BenchRow, SimStep, \
    SimTrace
