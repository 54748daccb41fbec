# -*- coding: utf-8 -*-
"""Enum for the available solving algorithms"""

from enum import Enum


class Algorithm(Enum):
    QPT = 'qpt'
    ZIELONKA = 'zielonka'

    @classmethod
    def from_string(cls, algorithm):
        return cls(algorithm.lower())

    def __str__(self):
        return self.value
