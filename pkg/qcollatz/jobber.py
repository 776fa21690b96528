# -*- coding: utf-8 -*-
"""
Main jobber module.

The Jobber runs the chunks of one search and folds their results, in chunk
order, into a single state. Chunks run inline, on a local process pool or
on celery workers; the folded state does not depend on which.
"""

import itertools
import os
from concurrent import futures

from celery import group

from qcollatz import kvs
from qcollatz import logs
from qcollatz import tasks

LOGGER = logs.LOG

THREADS_ENV = 'QCOLLATZ_THREADS'


def resolve_threads(threads=None):
    """Worker count: the --threads value, else $QCOLLATZ_THREADS, else the
    number of CPUs."""
    if threads:
        return threads
    from_env = os.environ.get(THREADS_ENV)
    if from_env:
        try:
            value = int(from_env)
        except ValueError:
            raise ValueError("%s must be an integer, got %r" % (
                    THREADS_ENV, from_env))
        if value < 1:
            raise ValueError("%s must be >= 1, got %s" % (THREADS_ENV, value))
        return value
    return os.cpu_count() or 1


class Jobber(object):
    """Execute chunk kernels in parallel and merge their results.

    `checkpoint` names a file that receives the folded state every
    `checkpoint_every` chunks through `describe(state)`, which returns the
    q, method, partial_counts and report fields of a checkpoint."""

    def __init__(self, threads=1, distribute=False, checkpoint=None,
                 checkpoint_every=0, job_logger=None):
        self.threads = threads
        self.distribute = distribute
        self.checkpoint = checkpoint
        self.checkpoint_every = checkpoint_every
        self.job_logger = job_logger

    @classmethod
    def from_params(cls, params, job_logger=None):
        """A Jobber for the parsed command-line parameters."""
        return cls(threads=resolve_threads(params.get('threads')),
                   distribute=bool(params.get('distribute')),
                   checkpoint=params.get('checkpoint'),
                   checkpoint_every=params.get('checkpoint_every') or 0,
                   job_logger=job_logger)

    def run(self, kind, chunks, merge, state, start=0, describe=None):
        """Fold merge(state, result) over chunks[start:], in order."""
        chunks = list(chunks)
        LOGGER.debug("running %s chunks %s..%s, %s workers%s", kind, start,
                     len(chunks), self.threads,
                     " on celery" if self.distribute else "")
        done = start
        for result in self._results(kind, chunks[start:]):
            state = merge(state, result)
            done += 1
            if self._due(done):
                self._save(describe, state, done)
        if self.checkpoint and describe is not None and done > start:
            self._save(describe, state, done)
        if self.job_logger is not None:
            self.job_logger.report("%s: %s chunks merged", kind, done)
        return state

    def _due(self, done):
        return bool(self.checkpoint and self.checkpoint_every and
                    done % self.checkpoint_every == 0)

    def _save(self, describe, state, done):
        if describe is None:
            return
        kvs.save_checkpoint(self.checkpoint, next_chunk=done,
                            **describe(state))

    def _results(self, kind, chunks):
        if not chunks:
            return
        if self.distribute:
            job = group(tasks.run_chunk.s(kind, list(args)) for args in chunks)
            for result in job.apply_async().get():
                yield result
        elif self.threads > 1 and len(chunks) > 1:
            workers = min(self.threads, len(chunks))
            with futures.ProcessPoolExecutor(max_workers=workers) as pool:
                for result in pool.map(tasks.execute_chunk,
                                       itertools.repeat(kind), chunks):
                    yield result
        else:
            for args in chunks:
                yield tasks.execute_chunk(kind, args)

