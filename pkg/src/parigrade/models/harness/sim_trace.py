# -*- coding: utf-8 -*-
"""Lower-bound simulation trace"""

import csv
import io


class SimStep:
    def __init__(self, vertex, witness, ambiguous=False):
        """
        :param vertex: ring vertex entered, numbered 1..2n
        :param witness: Witness after processing the vertex
        :param ambiguous: whether Odd's next move could be read more than one way
        """
        self.vertex = vertex
        self.witness = witness
        self.ambiguous = ambiguous

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'SimStep({0}, {1})'.format(self.vertex, self.witness)


class SimTrace:
    def __init__(self, n, rule_variant, table, steps=None, checkpoints=None):
        """
        :param n: ring half size
        :param rule_variant: RuleVariant used for the updates
        :param table: ColourTable decoding the witnesses
        :param steps: SimStep list in play order
        :param checkpoints: witnesses reached right after each even vertex
        """
        self.n = n
        self.rule_variant = rule_variant
        self.table = table
        self.steps = list(steps or [])
        self.checkpoints = list(checkpoints or [])

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return 'SimTrace(n={0}, steps={1}, distinct={2})'.format(
            self.n, len(self.steps), self.distinct_count)

    @property
    def distinct_witnesses(self):
        return set(step.witness for step in self.steps)

    @property
    def distinct_count(self):
        return len(self.distinct_witnesses)

    @property
    def flagged_steps(self):
        return [index for index, step in enumerate(self.steps) if step.ambiguous]

    @property
    def final(self):
        return self.steps[-1].witness if self.steps else None

    def to_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['step', 'vertex', 'witness'])
        for index, step in enumerate(self.steps):
            writer.writerow([index, step.vertex, step.witness.to_string(self.table)])
        return buffer.getvalue()
