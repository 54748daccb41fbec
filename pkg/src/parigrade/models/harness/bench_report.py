# -*- coding: utf-8 -*-
"""Benchmark report model"""

import csv
import io
import json

SCHEMA_VERSION = 1
FIELDS = ('instance', 'n', 'm', 'colours', 'algorithm', 'status', 'wall_time', 'lifts',
          'verdict_hash')
# Wall-clock columns differ between runs; every other column is reproducible.
TIMED_FIELDS = ('wall_time',)


class BenchRow:
    OK = 'ok'
    TIMEOUT = 'timeout'
    DISAGREE = 'disagree'
    FAILED = 'failed'

    def __init__(self, instance, n, m, colours, algorithm, wall_time=None, lifts=None,
                 verdict_hash=None, status=OK):
        """
        :param instance: instance label
        :param n: vertex count
        :param m: edge count
        :param colours: number of distinct colours
        :param algorithm: name of the algorithm
        :param wall_time: seconds, None when the run timed out
        :param lifts: total lifts, None for algorithms without lifting
        :param verdict_hash: hash of the winner vector
        :param status: ok, timeout, disagree, or failed when verification rejected
            the solution
        """
        self.instance = instance
        self.n = n
        self.m = m
        self.colours = colours
        self.algorithm = algorithm
        self.wall_time = wall_time
        self.lifts = lifts
        self.verdict_hash = verdict_hash
        self.status = status

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'BenchRow({0}, {1}, {2})'.format(self.instance, self.algorithm, self.status)

    def to_dict(self):
        return {field: getattr(self, field) for field in FIELDS}


class BenchReport:
    def __init__(self, rows=None):
        """
        :param rows: BenchRow list in instance order, then algorithm order
        """
        self.rows = list(rows or [])

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __len__(self):
        return len(self.rows)

    def cross_check(self):
        """Flag every row of an instance whose finished runs disagree on the winners

        :returns: list of instance labels with a disagreement
        """
        by_instance = {}
        for row in self.rows:
            by_instance.setdefault(row.instance, []).append(row)
        flagged = []
        for instance, rows in by_instance.items():
            hashes = {row.verdict_hash for row in rows if row.status != BenchRow.TIMEOUT}
            if len(hashes) > 1:
                flagged.append(instance)
                for row in rows:
                    if row.status != BenchRow.TIMEOUT:
                        row.status = BenchRow.DISAGREE
        return flagged

    @property
    def has_disagreement(self):
        return any(row.status == BenchRow.DISAGREE for row in self.rows)

    @property
    def has_failure(self):
        """Whether any run disagreed with another or failed verification"""
        return any(row.status in (BenchRow.DISAGREE, BenchRow.FAILED) for row in self.rows)

    def comparable(self):
        """Rows without their timing columns, equal for any two runs of one corpus"""
        return [{field: value for field, value in row.to_dict().items()
                 if field not in TIMED_FIELDS} for row in self.rows]

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=FIELDS, lineterminator='\n')
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row.to_dict())
        return buffer.getvalue()

    def to_json(self):
        return json.dumps({
            'schema': SCHEMA_VERSION,
            'rows': [row.to_dict() for row in self.rows]
        }, indent=2, sort_keys=True)
