"""Worker pools for corpus evaluation and phase-1 folds"""
import os
from contextlib import contextmanager
from multiprocessing import Pool


def get_n_jobs(n_jobs):
    """Number of worker processes for a requested ``n_jobs``

    ``None`` means one worker, ``0`` and ``-1`` all CPUs, ``-k`` all CPUs
    but ``k - 1``.
    """
    n_cpu = os.cpu_count() or 1
    if n_jobs is None:
        return 1
    if n_jobs <= 0:
        return max(min(n_jobs + 1 + n_cpu, n_cpu), 1)
    return n_jobs


class DummyPool:
    """In-process stand-in for the part of ``multiprocessing.Pool`` we use"""

    def __init__(self, initializer=None, initargs=()):
        if initializer is not None:
            initializer(*initargs)

    # noinspection PyUnusedLocal
    def map(self, func, iterable, chunksize=None):
        return [func(v) for v in iterable]

    # noinspection PyUnusedLocal
    def imap(self, func, iterable, chunksize=1):
        return (func(v) for v in iterable)


@contextmanager
def maybe_pool(processes: int = None, initializer=None, initargs=()):
    """Create ``multiprocessing.Pool`` if multiple CPUs are allowed

    Examples
    --------

    >>> from contextract.core import maybe_pool
    >>> with maybe_pool(processes=1) as pool:
    ...     # documents are extracted in this process
    ...     pool.map(len, ["mouse", "keyboard"])
    [5, 8]
    """
    n_jobs = get_n_jobs(processes)
    if n_jobs == 1:
        yield DummyPool(initializer, initargs)
    else:
        with Pool(n_jobs, initializer, initargs) as pool:
            yield pool
