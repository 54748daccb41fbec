# -*- coding: utf-8 -*-
"""Enum for comparison outcomes"""

from enum import Enum


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, left, right):
        """Ordering of two mutually comparable values"""
        if left < right:
            return cls.LESS
        if left == right:
            return cls.EQUAL
        return cls.GREATER
