# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4

import random
import unittest
from fractions import Fraction

from qcollatz import maps
from qcollatz import parity
from qcollatz.maps import DomainError
from qcollatz.parity import BudgetExceeded, ParityVector


class ParityVectorTestCase(unittest.TestCase):

    def setUp(self):
        self.vector = ParityVector.from_string("1011")

    def test_sums(self):
        self.assertEqual((3, 2, 2, 1, 0), self.vector.suffix_sums)
        self.assertEqual(3, self.vector.total)
        self.assertEqual(Fraction(3, 4), self.vector.coefficient)
        self.assertEqual(2, self.vector.partial(1, 3))
        self.assertEqual(1, self.vector.partial(0, 0))
        self.assertEqual(1, self.vector.prefix_total(2))
        self.assertEqual([0, 2, 3], self.vector.ones())

    def test_partial_range_is_checked(self):
        self.assertRaises(IndexError, self.vector.partial, 2, 1)
        self.assertRaises(IndexError, self.vector.partial, 0, 4)

    def test_codes(self):
        self.assertEqual(13, self.vector.code)
        self.assertEqual(self.vector, ParityVector.from_code(13, 4))

    def test_bad_input(self):
        self.assertRaises(DomainError, ParityVector.from_string, "10a")
        self.assertRaises(DomainError, ParityVector.from_string, "")
        self.assertRaises(DomainError, ParityVector, [])
        self.assertRaises(DomainError, ParityVector, [0, 2])

    def test_periods_and_rotation(self):
        self.assertEqual(2, ParityVector.from_string("1010").primitive_period())
        self.assertTrue(ParityVector.from_string("1010").is_repetition())
        self.assertFalse(ParityVector.from_string("11000").is_repetition())
        self.assertEqual(ParityVector.from_string("10001"),
                         ParityVector.from_string("11000").rotate(1))

    def test_string_forms(self):
        self.assertEqual("1011", str(self.vector))
        self.assertEqual("ParityVector('1011')", repr(self.vector))
        self.assertEqual(hash(self.vector), hash(ParityVector([1, 0, 1, 1])))


class ParityTestCase(unittest.TestCase):

    def test_parity_vector(self):
        # n-orbit 7, 18, 9, 23 under T_5
        self.assertEqual(ParityVector.from_string("1011"),
                         parity.parity_vector(5, 57, 4))
        self.assertEqual(ParityVector.from_string("01111"),
                         parity.parity_vector(7, 73, 5))
        self.assertRaises(DomainError, parity.parity_vector, 5, 58, 4)
        self.assertRaises(DomainError, parity.parity_vector, 5, 57, 0)

    def test_module_level_accessors(self):
        vector = parity.parity_vector(5, 57, 4)
        self.assertEqual(2, parity.partial_parity(vector, 1, 3))
        self.assertEqual(Fraction(3, 4), parity.parity_coefficient(vector))

    def test_seed_from_parity_inverts_parity_vector(self):
        for q in (3, 5, 7, 9):
            for k in range(1, 9):
                for n in range(1, 2 ** k + 1):
                    vector = parity.parity_vector(q, maps.conjugate(q, n), k)
                    self.assertEqual(n, parity.seed_from_parity(q, vector))

    def test_seed_from_parity_matches_the_scan(self):
        for text in ("1", "0", "11", "1011", "0000", "110100101"):
            vector = ParityVector.from_string(text)
            self.assertEqual(parity.seed_from_parity_bruteforce(7, vector),
                             parity.seed_from_parity(7, vector))

    def test_seed_from_parity_edge_vectors(self):
        self.assertEqual(3, parity.seed_from_parity(
                3, ParityVector.from_string("11")))
        self.assertEqual(16, parity.seed_from_parity(
                5, ParityVector.from_string("0000")))

    def test_verify_bijection(self):
        for q in (3, 5, 7, 9):
            for k in (1, 4, 10):
                report = parity.verify_bijection(q, k, chunk_size=100)
                self.assertTrue(report['distinct'])
                self.assertEqual(2 ** k, report['count'])

    def test_vectors_depend_on_the_residue_only(self):
        rng = random.Random(7)
        for q in (3, 5, 7, 9):
            for k in (1, 4, 9, 16):
                modulus = (q - 1) << (k + 1)
                for _ in range(40):
                    x = maps.conjugate(q, rng.randint(1, 10 ** 6))
                    same = x + modulus * rng.randint(1, 10 ** 4)
                    self.assertEqual(parity.parity_vector(q, x, k),
                                     parity.parity_vector(q, same, k))
                    # congruent modulo half the modulus only
                    odd = 2 * rng.randint(0, 10 ** 4) + 1
                    other = x + (modulus >> 1) * odd
                    self.assertNotEqual(parity.parity_vector(q, x, k),
                                        parity.parity_vector(q, other, k))

    def test_verify_bijection_budget(self):
        self.assertRaises(BudgetExceeded, parity.verify_bijection, 3, 12,
                          budget=1000)

    def test_check_budget(self):
        parity.check_budget("small", 5, 5)
        try:
            parity.check_budget("scan", 10, 5)
        except BudgetExceeded as e:
            self.assertEqual(("scan", 10, 5), (e.what, e.size, e.budget))
        else:
            self.fail("BudgetExceeded not raised")

    def test_fits_machine_word(self):
        self.assertTrue(parity.fits_machine_word(3, 30, 2 ** 16))
        self.assertFalse(parity.fits_machine_word(181, 10, 2 ** 20))
        self.assertFalse(parity.fits_machine_word(3, 62, 2 ** 16))

    def test_fast_and_exact_walks_agree(self):
        fast = parity.seed_walk(7, 20, 1, 500)
        exact = parity.seed_walk_exact(7, 20, 1, 500)
        self.assertEqual(exact, fast)
        self.assertEqual(([], []), parity.seed_walk(7, 20, 5, 5))

    def test_walk_falls_back_for_large_growth(self):
        self.assertEqual(parity.seed_walk_exact(181, 40, 1, 50),
                         parity.seed_walk(181, 40, 1, 50))

    def test_power_sum(self):
        vector = ParityVector.from_string("1011")
        self.assertEqual(315, parity.power_sum(5, vector))
        # 2^4 x_4 = 5^3 x_0 + power_sum
        self.assertEqual(16 * 465, 125 * 57 + parity.power_sum(5, vector))
