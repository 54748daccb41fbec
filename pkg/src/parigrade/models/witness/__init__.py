# -*- coding: utf-8 -*-
"""Witness Models"""

from .ordering import Ordering
from .update_mode import RuleVariant, UpdateMode
from .colour_table import ColourTable, colour_key, BLANK
from .witness import Witness, WON
from .certified_witness import CertifiedWitness
