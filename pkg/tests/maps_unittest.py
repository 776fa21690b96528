# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4

import pickle
import unittest

from qcollatz import maps
from qcollatz.maps import CqInt, DomainError, Multiplier

MULTIPLIERS = (3, 5, 7, 9, 181)


class MultiplierTestCase(unittest.TestCase):

    def test_rejects_even_small_and_non_integer_q(self):
        for bad in (4, 1, 2, -3, 0):
            self.assertRaises(DomainError, Multiplier, bad)
        self.assertRaises(DomainError, Multiplier, True)
        self.assertRaises(DomainError, Multiplier, 5.0)

    def test_constants(self):
        q = Multiplier(5)
        self.assertEqual(8, q.two_qm1)
        self.assertEqual(16, q.four_qm1)
        self.assertEqual(9, q.trivial_seed)
        self.assertEqual(None, q.mersenne_exp)
        self.assertEqual(3, Multiplier(7).mersenne_exp)
        self.assertTrue(Multiplier(181).is_prime)
        self.assertFalse(Multiplier(15).is_prime)

    def test_of_accepts_both_forms(self):
        q = Multiplier(7)
        self.assertTrue(Multiplier.of(q) is q)
        self.assertEqual(q, Multiplier.of(7))
        self.assertEqual(hash(q), hash(Multiplier(7)))

    def test_number_helpers(self):
        self.assertEqual(2, maps.mersenne_exponent(3))
        self.assertEqual(4, maps.mersenne_exponent(15))
        self.assertEqual(None, maps.mersenne_exponent(9))
        self.assertEqual([3, 5], maps.nontrivial_divisors(15))
        self.assertEqual([], maps.nontrivial_divisors(181))
        self.assertEqual(26, maps.mod_inverse(7, 181))
        self.assertRaises(DomainError, maps.mod_inverse, 3, 9)


class MapsTestCase(unittest.TestCase):

    def test_t_map(self):
        self.assertEqual(18, maps.t_map(5, 7))
        self.assertEqual(9, maps.t_map(5, 18))
        self.assertEqual(2, maps.t_map(3, 1))
        self.assertRaises(DomainError, maps.t_map, 5, 0)

    def test_conjugate_and_back(self):
        self.assertEqual(57, maps.conjugate(5, 7))
        self.assertEqual(7, maps.unconjugate(5, 57))
        self.assertEqual(9721, maps.conjugate(181, 27))
        self.assertRaises(DomainError, maps.conjugate, 5, 0)
        self.assertRaises(DomainError, maps.unconjugate, 5, 58)

    def test_f_map_follows_t_map(self):
        for q in MULTIPLIERS:
            for n in range(1, 300):
                self.assertEqual(maps.conjugate(q, maps.t_map(q, n)),
                                 maps.f_map(q, maps.conjugate(q, n)))

    def test_parity_predicates_agree(self):
        for q in MULTIPLIERS:
            for n in range(1, 100):
                self.assertEqual(maps.alpha_n(n),
                                 maps.alpha_q(q, maps.conjugate(q, n)))

    def test_f_map_values(self):
        self.assertEqual(1, maps.alpha_q(5, 57))
        self.assertEqual(145, maps.f_map(5, 57))
        self.assertEqual(0, maps.alpha_q(5, 145))
        self.assertEqual(73, maps.f_map(5, 145))

    def test_membership(self):
        self.assertTrue(maps.is_member(5, 9))
        self.assertFalse(maps.is_member(5, 10))
        self.assertFalse(maps.is_member(5, -7))
        self.assertFalse(maps.is_member(5, 1))
        self.assertRaises(DomainError, maps.unconjugate, 5, 1)
        self.assertEqual(1, maps.unconjugate(5, 9))
        self.assertRaises(DomainError, maps.f_map, 5, 10)
        self.assertRaises(DomainError, maps.alpha_q, 3, 6)

    def test_step_helpers_match_the_checked_maps(self):
        q = Multiplier(7)
        for n in range(1, 50):
            x = maps.conjugate(q, n)
            self.assertEqual((maps.alpha_q(q, x), maps.f_map(q, x)),
                             maps.f_step(q, x))
            self.assertEqual((n & 1, maps.t_map(q, n)), maps.t_step(q, n))

    def test_unbounded_magnitudes(self):
        x = maps.conjugate(3, 2 ** 400 - 1)
        self.assertEqual(3 * (x + 1) // 2, maps.f_map(3, x))


class CqIntTestCase(unittest.TestCase):

    def test_checks_membership(self):
        self.assertRaises(DomainError, CqInt, 5, 10)
        value = CqInt(5, 57)
        self.assertEqual(57, value)
        self.assertEqual(7, value.n)
        self.assertEqual(Multiplier(5), value.q)

    def test_prints_as_a_number(self):
        self.assertEqual("129", str(CqInt(5, 129)))
        self.assertEqual("x=129", "x=%s" % CqInt(5, 129))
        self.assertEqual("CqInt(5, 129)", repr(CqInt(5, 129)))

    def test_arithmetic_gives_plain_ints(self):
        value = CqInt(5, 57) + 8
        self.assertEqual(65, value)
        self.assertFalse(isinstance(value, CqInt))

    def test_pickles_with_its_multiplier(self):
        value = pickle.loads(pickle.dumps(CqInt(181, 9721)))
        self.assertEqual(9721, value)
        self.assertEqual(Multiplier(181), value.q)
