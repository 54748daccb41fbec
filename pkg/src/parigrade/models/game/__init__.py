# -*- coding: utf-8 -*-
"""Game Models"""

from .player import Player
from .vertex_record import VertexRecord
from .arena import Arena
from .arena_stats import ArenaStats
from .strategy import Strategy
from .region_pair import RegionPair
