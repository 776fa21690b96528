# -*- coding: utf-8 -*-

import os
import shutil
import tempfile
import unittest
from unittest import mock

from qcollatz import cycles
from qcollatz import jobber
from qcollatz import kvs
from qcollatz import stats
from qcollatz import tasks
from qcollatz.jobber import Jobber
from qcollatz.job import ChunkSplitter

BIG = 10 ** 6


def _absorb(report, result):
    return report.absorb(result)


def _describe(report):
    return {'q': 5, 'method': cycles.ORBIT,
            'partial_counts': dict(report.scanned),
            'report': report.to_dict()}


def _orbit_chunks(n_max, chunk_size):
    return ChunkSplitter(1, n_max + 1, chunk_size).chunks((5,), (1000, BIG))


class TasksTestCase(unittest.TestCase):

    def test_execute_chunk(self):
        self.assertEqual(cycles.orbit_chunk(5, 1, 20, 1000, BIG),
                         tasks.execute_chunk('orbit', [5, 1, 20, 1000, BIG]))
        self.assertEqual(stats.hist_chunk(5, 4, 1, 17),
                         tasks.execute_chunk('hist', (5, 4, 1, 17)))

    def test_unknown_kind(self):
        self.assertRaises(ValueError, tasks.execute_chunk, 'nothing', [])


class JobberTestCase(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.checkpoint = os.path.join(self.directory, "orbit.json")

    def tearDown(self):
        shutil.rmtree(self.directory, ignore_errors=True)

    def _search(self, jobber_, start=0, state=None):
        return jobber_.run('orbit', _orbit_chunks(200, 20), _absorb,
                           state or cycles.SearchReport(5, cycles.ORBIT),
                           start=start, describe=_describe)

    def test_inline_and_pool_agree(self):
        inline = self._search(Jobber(threads=1))
        pooled = self._search(Jobber(threads=2))
        self.assertEqual(inline.to_dict(), pooled.to_dict())
        self.assertEqual([1, 13, 17], sorted(inline.cycles))

    def test_merges_counts_in_chunk_order(self):
        counts = Jobber().run('hist', ChunkSplitter(1, 257, 50).chunks(
                (5, 8)), stats.merge_counts, None)
        self.assertEqual(stats.mu_distribution(5, 8).counts, counts)

    def test_writes_checkpoints(self):
        runner = Jobber(checkpoint=self.checkpoint, checkpoint_every=3)
        report = self._search(runner)
        state = kvs.load_checkpoint(self.checkpoint, 5, cycles.ORBIT)
        self.assertEqual(10, state['next_chunk'])
        self.assertEqual(report.to_dict(), state['report'])

    def test_resume_gives_the_same_result(self):
        whole = self._search(Jobber())
        first = Jobber().run('orbit', _orbit_chunks(200, 20)[:4], _absorb,
                             cycles.SearchReport(5, cycles.ORBIT))
        resumed = self._search(Jobber(), start=4, state=first)
        self.assertEqual(whole.to_dict(), resumed.to_dict())

    def test_reports_to_the_job_logger(self):
        job_logger = mock.Mock()
        Jobber(job_logger=job_logger).run(
            'hist', [(5, 4, 1, 17)], stats.merge_counts, None)
        job_logger.report.assert_called_once_with(
            "%s: %s chunks merged", 'hist', 1)

    def test_from_params(self):
        runner = Jobber.from_params({'threads': 3, 'checkpoint': 'c.json',
                                     'checkpoint_every': 5})
        self.assertEqual((3, False, 'c.json', 5), (
                runner.threads, runner.distribute, runner.checkpoint,
                runner.checkpoint_every))


class ResolveThreadsTestCase(unittest.TestCase):

    def test_flag_wins(self):
        with mock.patch.dict(os.environ, {jobber.THREADS_ENV: '7'}):
            self.assertEqual(2, jobber.resolve_threads(2))

    def test_environment(self):
        with mock.patch.dict(os.environ, {jobber.THREADS_ENV: '7'}):
            self.assertEqual(7, jobber.resolve_threads())
        with mock.patch.dict(os.environ, {jobber.THREADS_ENV: '0'}):
            self.assertRaises(ValueError, jobber.resolve_threads)
        with mock.patch.dict(os.environ, {jobber.THREADS_ENV: 'many'}):
            self.assertRaises(ValueError, jobber.resolve_threads)

    def test_cpu_count(self):
        with mock.patch.dict(os.environ, clear=True):
            self.assertTrue(jobber.resolve_threads() >= 1)
