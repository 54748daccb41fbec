# -*- coding: utf-8 -*-
"""Unit tests for the benchmark runner"""

import json
import logging

import pytest
from src.parigrade.bench import load_instances, make_solver, run_bench, run_instance, \
    write_report
from src.parigrade.errors import InvalidSpec, SolveTimeout
from src.parigrade.models import Algorithm, BenchReport, BenchRow, Player, RuleVariant, \
    UpdateMode
from src.parigrade.qpt_solver import QptSolver
from src.parigrade.utils import THREADS_VARIABLE, verdict_hash
from src.parigrade.zielonka_solver import ZielonkaSolver
from tests.helpers.games import RING_TWO_TEXT

ALL_EVEN = verdict_hash([Player.EVEN] * 4)


class TestLoadInstances:
    def test_directory(self, write_file, ring_two, tmp_path):
        write_file(RING_TWO_TEXT, 'b.pg')
        write_file(RING_TWO_TEXT, 'a.gm')
        write_file('not a game', 'notes.txt')

        instances = load_instances(str(tmp_path))

        assert [label for label, _ in instances] == ['a.gm', 'b.pg']
        assert all(arena == ring_two for _, arena in instances)

    def test_manifest(self, write_file, ring_two):
        write_file(RING_TWO_TEXT, 'b.pg')
        manifest = write_file('# corpus\n\nb.pg\nring 2\n  random 10 1 3 4 7\n', 'corpus.txt')

        instances = load_instances(manifest)

        assert [label for label, _ in instances] == ['b.pg', 'ring-2', 'random-10-1-3-4-7']
        assert instances[0][1] == ring_two
        assert instances[1][1] == ring_two
        assert instances[2][1].n == 10

    def test_empty_manifest(self, write_file):
        assert load_instances(write_file('# nothing yet\n', 'corpus.txt')) == []

    def test_bad_generator_line(self, write_file):
        with pytest.raises(InvalidSpec):
            load_instances(write_file('ring two\n', 'corpus.txt'))

    def test_missing_game_file(self, write_file):
        with pytest.raises(OSError):
            load_instances(write_file('missing.pg\n', 'corpus.txt'))


class TestRunInstance:
    def test_qpt(self, ring_two):
        row = run_instance('ring', ring_two, Algorithm.QPT)

        assert (row.instance, row.n, row.m, row.colours, row.algorithm) == \
            ('ring', 4, 5, 4, 'qpt')
        assert row.status == BenchRow.OK
        assert row.lifts > 0
        assert row.wall_time >= 0
        assert row.verdict_hash == ALL_EVEN

    def test_zielonka(self, ring_two):
        row = run_instance('ring', ring_two, Algorithm.ZIELONKA)

        assert row.algorithm == 'zielonka'
        assert row.lifts is None
        assert row.verdict_hash == ALL_EVEN

    def test_timeout(self, ring_two, mocker):
        solver = mocker.patch('src.parigrade.bench.make_solver').return_value
        solver.solve.side_effect = SolveTimeout(1)

        row = run_instance('ring', ring_two, Algorithm.QPT, timeout=1)

        assert row.status == BenchRow.TIMEOUT
        assert row.wall_time is None
        assert row.verdict_hash is None

    def test_make_solver(self):
        mode = UpdateMode(RuleVariant.EVEN_OVERFLOW)

        qpt = make_solver(Algorithm.QPT, mode, edge_cache=True, order_seed=4)
        recursive = make_solver(Algorithm.ZIELONKA, mode, verify=False, timeout=2)

        assert isinstance(qpt, QptSolver)
        assert (qpt.mode, qpt.edge_cache, qpt.order_seed) == (mode, True, 4)
        assert isinstance(recursive, ZielonkaSolver)
        assert (recursive.verify, recursive.timeout) == (False, 2)


class TestRunBench:
    def test_rows_follow_instance_then_algorithm_order(self, ring_two, fork_game):
        report = run_bench([('ring', ring_two), ('fork', fork_game)], threads=3)

        assert [(row.instance, row.algorithm) for row in report.rows] == [
            ('ring', 'qpt'), ('ring', 'zielonka'), ('fork', 'qpt'), ('fork', 'zielonka')]
        assert all(row.status == BenchRow.OK for row in report.rows)
        assert report.rows[0].verdict_hash == report.rows[1].verdict_hash == ALL_EVEN
        assert report.rows[2].verdict_hash == report.rows[3].verdict_hash
        assert not report.has_failure

    def test_random_corpus_agrees(self, random_games):
        instances = [('g{}'.format(index), arena) for index, arena in enumerate(random_games)]

        report = run_bench(instances, threads=2)

        assert len(report) == 2 * len(random_games)
        assert report.cross_check() == []

    def test_reruns_differ_only_in_timing(self, random_games):
        instances = [('g{}'.format(index), arena) for index, arena in enumerate(random_games)]

        first, second = run_bench(instances, threads=2), run_bench(instances, threads=1)

        assert first.comparable() == second.comparable()
        assert all('wall_time' not in row for row in first.comparable())

    def test_empty(self):
        assert run_bench([]) == BenchReport()

    def test_threads_from_environment(self, ring_two, monkeypatch):
        monkeypatch.setenv(THREADS_VARIABLE, '1')

        report = run_bench([('ring', ring_two)], [Algorithm.QPT])

        assert len(report) == 1

    def test_disagreement_is_flagged(self, ring_two, mocker, caplog):
        def fake_run(label, arena, algorithm, **kwargs):
            return BenchRow(label, arena.n, arena.m, 4, str(algorithm),
                            verdict_hash=str(algorithm))
        mocker.patch('src.parigrade.bench.run_instance', side_effect=fake_run)

        with caplog.at_level(logging.ERROR):
            report = run_bench([('ring', ring_two)], threads=1)

        assert [row.status for row in report.rows] == [BenchRow.DISAGREE] * 2
        assert 'algorithms disagree on the winners of ring' in caplog.text


class TestWriteReport:
    def test_write_report(self, tmp_path, ring_two):
        report = run_bench([('ring', ring_two)], [Algorithm.ZIELONKA], threads=1)

        csv_path, json_path = write_report(report, str(tmp_path / 'ring'))

        assert csv_path.endswith('ring.csv')
        with open(csv_path, encoding='utf-8') as handle:
            assert handle.read() == report.to_csv()
        with open(json_path, encoding='utf-8') as handle:
            document = json.load(handle)
        assert document['rows'][0]['instance'] == 'ring'
        assert document['rows'][0]['verdict_hash'] == ALL_EVEN
