# -*- coding: utf-8 -*-
"""Unit tests for parigrade utils"""

import hashlib

import pytest
from src.parigrade.models import Player
from src.parigrade.utils import THREADS_VARIABLE, threads_from_env, verdict_hash


class TestUtils:
    def test_verdict_hash(self):
        assert verdict_hash([Player.EVEN, Player.ODD]) == hashlib.sha256(b'01').hexdigest()

    def test_verdict_hash_depends_on_order(self):
        assert verdict_hash([Player.EVEN, Player.ODD]) != verdict_hash([Player.ODD, Player.EVEN])

    def test_threads_from_env(self):
        assert threads_from_env({THREADS_VARIABLE: ' 3 '}) == 3

    def test_threads_default_to_cpu_count(self, mocker):
        mocker.patch('src.parigrade.utils.os.cpu_count', return_value=6)

        assert threads_from_env({}) == 6

    def test_threads_without_cpu_count(self, mocker):
        mocker.patch('src.parigrade.utils.os.cpu_count', return_value=None)

        assert threads_from_env({THREADS_VARIABLE: ''}) == 1

    def test_threads_read_os_environ(self, monkeypatch):
        monkeypatch.setenv(THREADS_VARIABLE, '2')

        assert threads_from_env() == 2

    @pytest.mark.parametrize('value', ['zero', '0', '-4', '1.5'])
    def test_invalid_threads(self, value):
        with pytest.raises(ValueError, match='PARIGRADE_THREADS must be a positive integer'):
            threads_from_env({THREADS_VARIABLE: value})
