# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4

import random
import unittest

from qcollatz import maps
from qcollatz import parity
from qcollatz import trajectory
from qcollatz.maps import DomainError, ParityMismatch
from qcollatz.parity import ParityVector


class IterateTestCase(unittest.TestCase):

    def test_q5_from_7(self):
        traj = trajectory.iterate(5, 57, 5)
        self.assertEqual([7, 18, 9, 23, 58], traj.values('n'))
        self.assertEqual([57, 145, 73, 185, 465], traj.values('x'))
        self.assertEqual(233, traj.final)
        self.assertEqual("10110", str(traj.parity))
        self.assertEqual(465, traj.max_value)
        self.assertFalse(traj.capped)

    def test_q7_from_73(self):
        traj = trajectory.iterate(7, 73, 5)
        self.assertEqual((73, 37, 133, 469, 1645), traj.iterates)
        self.assertEqual(5761, traj.final)

    def test_size_cap(self):
        traj = trajectory.iterate(5, 57, 20, size_cap_bits=10)
        self.assertTrue(traj.capped)
        self.assertEqual(7, traj.k)
        self.assertEqual(1465, traj.final)
        self.assertRaises(DomainError, trajectory.iterate, 5, 57, 3, 4)

    def test_domain(self):
        self.assertRaises(DomainError, trajectory.iterate, 5, 58, 3)
        self.assertRaises(DomainError, trajectory.iterate, 4, 57, 3)
        self.assertRaises(DomainError, trajectory.iterate, 5, 57, 0)


class ClosedFormTestCase(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(465, trajectory.closed_form_power(
                5, 57, ParityVector.from_string("1011")))
        self.assertEqual(5761, trajectory.closed_form_power(
                7, 73, ParityVector.from_string("01111")))
        self.assertEqual(5761, trajectory.closed_form_product(
                7, trajectory.iterate(7, 73, 5)))

    def test_wrong_vector_is_refused(self):
        self.assertRaises(ParityMismatch, trajectory.closed_form_power,
                          5, 57, ParityVector.from_string("0000"))

    def test_random_triples_agree(self):
        rng = random.Random(20101)
        for _ in range(300):
            q = rng.choice((3, 5, 7, 9, 181))
            k = rng.randint(1, 120)
            x0 = maps.conjugate(q, rng.randint(1, 10 ** 6))
            traj = trajectory.iterate(q, x0, k)
            self.assertEqual(traj.final, trajectory.closed_form_power(
                    q, x0, traj.parity, verify=True))
            self.assertEqual(traj.final,
                             trajectory.closed_form_product(q, traj))

    def test_trivial_return(self):
        # n = 3 reaches 1 after five steps of T_3
        self.assertTrue(trajectory.trivial_return_check(
                3, 13, ParityVector.from_string("11000")))
        self.assertFalse(trajectory.trivial_return_check(
                3, 13, ParityVector.from_string("1100")))
        self.assertTrue(trajectory.trivial_return_check(
                5, 9, ParityVector.from_string("11000")))


class BoundsTestCase(unittest.TestCase):

    def test_upper_bound_exponents(self):
        self.assertEqual((2, 1), trajectory.upper_bound_exponent(3))
        self.assertEqual((3, 1), trajectory.upper_bound_exponent(7))
        self.assertEqual((5, 2), trajectory.upper_bound_exponent(5))
        self.assertEqual(None, trajectory.upper_bound_exponent(9))

    def test_lower_bound_holds_everywhere(self):
        for q in (3, 5, 7, 9, 181):
            for n in range(1, 200, 7):
                traj = trajectory.iterate(q, maps.conjugate(q, n), 60)
                report = trajectory.check_growth_bounds(q, traj)
                self.assertTrue(report.lower_ok, (q, n))
                self.assertEqual([], report.lower_violations)

    def test_upper_check_skips_the_trivial_seed(self):
        report = trajectory.check_growth_bounds(
            7, trajectory.iterate(7, 13, 9))
        self.assertFalse(report.upper_checked)
        report = trajectory.check_growth_bounds(
            9, trajectory.iterate(9, 17, 9))
        self.assertFalse(report.upper_checked)

    def test_report_dict(self):
        report = trajectory.check_growth_bounds(
            3, trajectory.iterate(3, 13, 10))
        data = report.to_dict()
        self.assertEqual(10, data['k'])
        self.assertTrue(data['lower_ok'])
        self.assertTrue(data['upper_checked'])

    def test_bounds_chunk(self):
        result = trajectory.bounds_chunk(3, 1, 50, 100, 10 ** 6)
        self.assertEqual(49, result['seeds'])
        self.assertEqual(0, result['lower_violations'])
        # every seed but the trivial one
        self.assertEqual(48, result['upper_checked'])
        self.assertEqual(0, result['capped'])

    def test_merge_bounds_in_order(self):
        left = trajectory.bounds_chunk(7, 1, 20, 50, 10 ** 6)
        right = trajectory.bounds_chunk(7, 20, 40, 50, 10 ** 6)
        whole = trajectory.bounds_chunk(7, 1, 40, 50, 10 ** 6)
        self.assertEqual(whole, trajectory.merge_bounds(left, right))
        self.assertEqual(left, trajectory.merge_bounds(None, left))

    def test_absorption_step(self):
        traj = trajectory.iterate(3, 13, 10)
        self.assertEqual(5, trajectory.absorption_step(3, traj))
        self.assertEqual(None, trajectory.absorption_step(
                3, trajectory.iterate(3, 13, 3)))


class StoppingTestCase(unittest.TestCase):

    def test_stop_info(self):
        # x-orbit 13, 21, 33, 17, 9, 5 under F_3
        info = trajectory.stop_info(3, 13, 100)
        self.assertEqual(4, info.stopping_time)
        self.assertEqual(5, info.total_steps_to_trivial)
        self.assertEqual(100, info.cap)

    def test_stop_info_from_the_trivial_seed(self):
        info = trajectory.stop_info(3, 5, 10)
        self.assertEqual(None, info.stopping_time)
        self.assertEqual(2, info.total_steps_to_trivial)

    def test_stop_info_under_a_short_cap(self):
        info = trajectory.stop_info(3, 13, 3)
        self.assertEqual({'stopping_time': None,
                          'total_steps_to_trivial': None, 'cap': 3},
                         info.to_dict())

    def test_leading_ones_run_is_finite(self):
        for m in range(1, 25):
            seed = maps.conjugate(3, 2 ** m - 1)
            self.assertEqual(m, trajectory.leading_ones_run(3, seed, 100))
        self.assertEqual(None, trajectory.leading_ones_run(
                3, maps.conjugate(3, 2 ** 30 - 1), 10))

    def test_all_ones_prefixes_exist(self):
        vector = ParityVector.from_string("11")
        self.assertEqual(3, parity.seed_from_parity(3, vector))


class ConvergenceScanTestCase(unittest.TestCase):

    def test_small_range(self):
        result = trajectory.convergence_scan(1, 1000, 1000)
        self.assertEqual(999, result['seeds'])
        self.assertEqual(999, result['resolved'])
        self.assertEqual([], result['unresolved'])
        steps, seed = result['max_stopping_time']
        self.assertTrue(1 < seed < 1000)
        self.assertTrue(steps > 0)

    def test_chunks_merge_to_the_whole(self):
        whole = trajectory.convergence_scan(1, 2000, 1000)
        merged = trajectory.merge_convergence(
            trajectory.merge_convergence(
                None, trajectory.convergence_scan(1, 700, 1000)),
            trajectory.convergence_scan(700, 2000, 1000))
        self.assertEqual(whole, merged)

    def test_unresolved_under_a_tiny_cap(self):
        result = trajectory.convergence_scan(27, 28, 5)
        self.assertEqual([27], result['unresolved'])
