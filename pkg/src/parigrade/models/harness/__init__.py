# -*- coding: utf-8 -*-
"""Harness Models"""

from .algorithm import Algorithm
from .run_config import RunConfig
from .bench_report import BenchReport, BenchRow, SCHEMA_VERSION
from .sim_trace import SimStep, SimTrace
