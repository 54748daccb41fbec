# -*- coding: utf-8 -*-
"""Settings of one command-line run"""

from ..witness import UpdateMode
from .algorithm import Algorithm

NEEDS_INPUT = ('solve', 'verify', 'bench')


class RunConfig:
    def __init__(self, subcommand, input_path=None, generator=None, mode=None,
                 algorithm=Algorithm.QPT, edge_cache=False, trace=False, verify=True,
                 timeout=None, output=None, seed=None, threads=None):
        """
        :param subcommand: name of the command being run
        :param input_path: game file, manifest or directory
        :param generator: GeneratorSpec used instead of an input file
        :param mode: UpdateMode, defaults to the standard rules with compression
        :param algorithm: Algorithm
        :param edge_cache: cache antagonistic updates per edge
        :param trace: report every lift
        :param verify: check the solution before reporting it
        :param timeout: wall-clock limit in seconds
        :param output: path results are written to
        :param seed: seed for generators and lift orders
        :param threads: worker count of the benchmark runner
        """
        if subcommand in NEEDS_INPUT and (input_path is None) == (generator is None):
            raise ValueError('exactly one of input_path and generator must be provided')
        if timeout is not None and timeout <= 0:
            raise ValueError('timeout must be positive')
        if not isinstance(algorithm, Algorithm):
            raise ValueError('algorithm must be an Algorithm')
        if threads is not None and threads < 1:
            raise ValueError('threads must be positive')

        self.subcommand = subcommand
        self.input_path = input_path
        self.generator = generator
        self.mode = mode if mode is not None else UpdateMode()
        self.algorithm = algorithm
        self.edge_cache = edge_cache
        self.trace = trace
        self.verify = verify
        self.timeout = timeout
        self.output = output
        self.seed = seed
        self.threads = threads

    def __eq__(self, other):
        """Override default equality operator"""
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        return False

    def __repr__(self):
        return 'RunConfig({0}, {1})'.format(self.subcommand, self.input_path or self.generator)
