# -*- coding: utf-8 -*-
"""Game and command-line fixtures, imported by conftest"""
