# -*- coding: utf-8 -*-
"""Shared tables, hypothesis strategies and mock matchers for the parigrade tests"""

from .matchers import Matcher
