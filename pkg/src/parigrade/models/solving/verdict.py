# -*- coding: utf-8 -*-
"""Verification verdict model"""

from enum import Enum


class VerdictStatus(Enum):
    PASS = 1
    FAIL = 2

    def __str__(self):
        return self.name.lower()


class Verdict:
    def __init__(self, status, reason=None, counterexample=None):
        """
        :param status: VerdictStatus
        :param reason: why verification failed
        :param counterexample: offending vertex or list of vertices forming a cycle
        """
        self.status = status
        self.reason = reason
        self.counterexample = counterexample

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __bool__(self):
        return self.status is VerdictStatus.PASS

    def __repr__(self):
        if self:
            return 'Verdict(pass)'
        return 'Verdict(fail: {0}, {1})'.format(self.reason, self.counterexample)

    @classmethod
    def passed(cls):
        return cls(VerdictStatus.PASS)

    @classmethod
    def failed(cls, reason, counterexample=None):
        return cls(VerdictStatus.FAIL, reason, counterexample)
