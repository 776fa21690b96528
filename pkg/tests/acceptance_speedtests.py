# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Full-scale acceptance runs. Slow; run them with

    python run_tests.py --speed_tests
"""

import random
import unittest

from qcollatz import cycles
from qcollatz import maps
from qcollatz import parity
from qcollatz import stats
from qcollatz import trajectory
from qcollatz.job import ChunkSplitter
from qcollatz.jobber import Jobber, resolve_threads
from qcollatz.parser import catalog

from tests.utils import test

STEP_CAP = 10 ** 4
SIZE_CAP_BITS = 10 ** 6


def _absorb(report, result):
    return report.absorb(result)


def orbit_search(q, n_max, step_cap=STEP_CAP, size_cap_bits=SIZE_CAP_BITS):
    """find_cycles_orbit spread over every CPU."""
    chunks = ChunkSplitter(1, n_max + 1, 500).chunks(
        (q,), (step_cap, size_cap_bits))
    return Jobber(threads=resolve_threads()).run(
        'orbit', chunks, _absorb, cycles.SearchReport(q, cycles.ORBIT))


class CycleAcceptanceTestCase(unittest.TestCase):

    def assert_structure(self, cycle):
        q = cycle.q
        self.assertTrue(cycles.second_periodicity_check(
                q, cycle.min_seed_n, cycle.parity), cycle)
        self.assertTrue(cycles.divisor_condition(q, cycle), cycle)
        self.assertTrue(cycles.parity_coeff_bounds_check(q, cycle), cycle)
        self.assertEqual([], cycle.invariant_failures())
        self.assertFalse(cycle.class_h in cycles.class_exclusions(q))

    @test.timeit
    def _q5_orbit_search(self):
        return orbit_search(5, 10 ** 4)

    def test_q5_orbit_search(self):
        report = self._q5_orbit_search()
        rows = [(c.min_seed_n, c.period, c.total_parity, c.s)
                for c in report.sorted_cycles()]
        self.assertEqual([(1, 5, 2, 2), (13, 7, 3, 3), (17, 7, 3, 5)], rows)
        shipped = dict((row['n0'], row) for row in catalog.read_catalog(q=5))
        for cycle in report.sorted_cycles():
            self.assertEqual(shipped[cycle.min_seed_n], cycle.to_dict())
            self.assert_structure(cycle)
            self.assertTrue(catalog.verify_catalog_row(
                    cycle.to_dict())['verified'])
        print("q=5: %s undetermined orbits" % report.undetermined)

    @test.timeit
    def _q181_parity_enum(self):
        return cycles.find_cycles_parity_enum(181, 15)

    def test_q181_parity_enum(self):
        report = self._q181_parity_enum()
        self.assertTrue(self._q181_parity_enum.last_elapsed < 300)
        self.assertEqual([9721, 12601],
                         [c.min_seed_x for c in report.sorted_cycles()])
        for cycle in report.sorted_cycles():
            self.assertTrue(catalog.verify_catalog_row(
                    cycle.to_dict())['verified'])
            self.assert_structure(cycle)
            margin = cycles.cycle_margin(cycle)
            self.assertTrue(float(margin['high']) < 1.0 / 181)

    def test_mersenne_multipliers_have_one_cycle(self):
        # the size cap keeps the fast-growing orbits of q = 15, 31 short
        for p in (2, 3, 4, 5):
            q = (1 << p) - 1
            report = orbit_search(q, 10 ** 5, size_cap_bits=256)
            self.assertEqual([cycles.mersenne_trivial_cycle(p)],
                             report.sorted_cycles())
            cycle = report.sorted_cycles()[0]
            self.assert_structure(cycle)
            self.assertEqual(p, cycle.period)
            self.assertEqual(1, cycle.total_parity)
            print("q=%s: %s undetermined orbits" % (q, report.undetermined))

    def test_trivial_cycle_classification(self):
        found = cycles.search_trivial_cycles(1, 10 ** 4, 14)
        self.assertEqual([(2 ** p - 1, p) for p in range(2, 14)],
                         [(q, p) for q, p, _ in found])
        found = cycles.search_trivial_cycles(2, 10 ** 4, 40)
        self.assertEqual([(5, 5)], [(q, p) for q, p, _ in found])


class TrajectoryAcceptanceTestCase(unittest.TestCase):

    @test.timeit
    def _collatz(self):
        chunks = ChunkSplitter(1, 10 ** 6 + 1, 50000).chunks((), (STEP_CAP,))
        return Jobber(threads=resolve_threads()).run(
            'collatz', chunks, trajectory.merge_convergence, None)

    def test_collatz_up_to_a_million(self):
        result = self._collatz()
        self.assertEqual(10 ** 6, result['resolved'])
        self.assertEqual([], result['unresolved'])

    def test_closed_forms_on_random_triples(self):
        rng = random.Random(1)
        for _ in range(10 ** 4):
            q = rng.choice((3, 5, 7, 9, 181))
            k = rng.randint(1, 200)
            x0 = maps.conjugate(q, rng.randint(1, 10 ** 9))
            traj = trajectory.iterate(q, x0, k)
            self.assertEqual(traj.final, trajectory.closed_form_power(
                    q, x0, traj.parity))
            self.assertEqual(traj.final,
                             trajectory.closed_form_product(q, traj))
            self.assertEqual([], trajectory.check_growth_bounds(
                    q, traj).lower_violations)

    def test_upper_bound_report(self):
        for q in (3, 7):
            chunks = ChunkSplitter(1, 10 ** 4 + 1, 500).chunks(
                (q,), (1000, SIZE_CAP_BITS))
            result = Jobber(threads=resolve_threads()).run(
                'bounds', chunks, trajectory.merge_bounds, None)
            self.assertEqual(10 ** 4, result['seeds'])
            self.assertEqual(0, result['lower_violations'])
            print("q=%s: %s upper-bound violations, %s beyond absorption" % (
                    q, result['upper_violations'],
                    result['beyond_absorption']))


class StatsAcceptanceTestCase(unittest.TestCase):

    def test_bijection(self):
        for q in (3, 5, 7, 9):
            for k in range(1, 13):
                self.assertTrue(parity.verify_bijection(q, k)['distinct'])

    def test_exhaustive_histograms_are_binomial(self):
        for q in (3, 5, 7):
            for k in (12, 16):
                histogram = stats.mu_distribution(q, k)
                self.assertEqual([stats.binomial_pmf(k, m) * 2 ** k
                                  for m in range(k + 1)], histogram.counts)

    def test_chebyshev_bound_holds_on_samples(self):
        for q in (5, 7):
            for k in (50, 100):
                estimate = stats.sampled_density(q, k, 10 ** 5, 20101)
                bound = stats.chebyshev_divergence_bound(q, k)
                self.assertTrue(float(estimate.fraction) >= bound,
                                (q, k, estimate.fraction, bound))
        self.assertAlmostEqual(0.740, stats.chebyshev_divergence_bound(5, 100),
                               places=3)
