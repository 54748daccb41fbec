# -*- coding: utf-8 -*-
"""Command-line runner fixtures"""

import pytest
from click.testing import CliRunner


@pytest.fixture
def cli_runner():
    return CliRunner()


@pytest.fixture
def write_file(tmp_path):
    def _write_file(text, name='game.pg'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write_file
