# -*- coding: utf-8 -*-
"""Small helpers shared by the command-line tools"""

import hashlib
import os

THREADS_VARIABLE = 'PARIGRADE_THREADS'


def verdict_hash(winners):
    """
    This method takes the winner of every vertex in dense order and returns a
    hex digest that is equal for two solutions exactly when they agree on every
    vertex. Benchmark rows of different algorithms are compared through it.
    """
    text = ''.join(str(winner.value) for winner in winners)
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


def threads_from_env(environ=None):
    """Worker count for benchmark runs.

    :param environ: mapping to read instead of ``os.environ``
    :returns: value of PARIGRADE_THREADS, or the CPU count when it is unset
    :raises: ValueError when the variable is not a positive integer
    """
    environ = os.environ if environ is None else environ
    value = environ.get(THREADS_VARIABLE, '').strip()
    if not value:
        return os.cpu_count() or 1
    try:
        threads = int(value)
    except ValueError:
        raise ValueError('{0} must be a positive integer, got {1!r}'.format(
            THREADS_VARIABLE, value))
    if threads < 1:
        raise ValueError('{0} must be a positive integer, got {1!r}'.format(
            THREADS_VARIABLE, value))
    return threads
