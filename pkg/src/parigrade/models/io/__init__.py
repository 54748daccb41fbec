# -*- coding: utf-8 -*-
"""Input/Output Models"""

from .generator_spec import GeneratorFamily, GeneratorSpec
from .solution_document import SolutionDocument
