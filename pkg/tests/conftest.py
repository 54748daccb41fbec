# -*- coding: utf-8 -*-
"""Test configuration for pytest"""

import pytest
from tests.fixtures.games import fork_game, ring_two, odd_loop, random_games, make_game
from tests.fixtures.cli_runner import cli_runner, write_file
