"""
Unit tests for the base ring R_ell and equivariant odd Grassmannian cohomology
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass import osym
from oddgrass.grass_cohomology import (OHElem, REllElem, alpha, complete_even, delta_auto,
                                       delta_closed, dot_e, dot_h, expected_oh_rank,
                                       gram_pairing_check, oh_bar, oh_basis, oh_from_osym,
                                       oh_from_rell, oh_from_schur, oh_mul, oh_normalize, oh_one,
                                       oh_rank, oh_trace, psi_iso, rank_parameter, rell_dimension,
                                       rell_from_osym, sgn_from_lr, sgn_function, top_partition,
                                       trace_gram)
from oddgrass.qpi_scalars import GPScalar


class TestBaseRing(unittest.TestCase):
    """Test cases for R_ell = Sym_m[c]"""

    def setUp(self):
        """Set up test fixtures"""
        self.c3 = REllElem.c(3)
        self.g3 = REllElem.g(1, 3)

    def test_rank_parameter(self):
        for ell, m in [(0, 0), (1, 0), (2, 1), (3, 1), (4, 2)]:
            with self.subTest(ell=ell):
                self.assertEqual(rank_parameter(ell), m)
        with self.assertRaises(ValueError):
            rank_parameter(-1)

    def test_c_squares_to_zero(self):
        self.assertTrue((self.c3 * self.c3).is_zero())
        self.assertFalse((self.c3 * self.g3).is_zero())
        self.assertEqual(str(self.g3 * self.c3), 'g1*c')

    def test_even_ell_relation(self):
        """c g_{ell/2} = 0 for even ell, and c = 0 in R_0"""
        self.assertTrue((REllElem.c(2) * REllElem.g(1, 2)).is_zero())
        self.assertTrue((REllElem.c(4) * REllElem.g(2, 4)).is_zero())
        self.assertFalse((REllElem.c(4) * REllElem.g(1, 4)).is_zero())
        self.assertTrue(REllElem.c(0).is_zero())

    def test_generators_out_of_range(self):
        self.assertEqual(REllElem.g(0, 3), 1)
        self.assertTrue(REllElem.g(2, 3).is_zero())
        self.assertTrue(REllElem.g(-1, 3).is_zero())

    def test_images_of_osym(self):
        """e_1 -> c, e_2 -> -g_1, h_2 -> g_1"""
        self.assertEqual(dot_e(1, 3), self.c3)
        self.assertEqual(dot_e(2, 3), -self.g3)
        self.assertEqual(dot_h(1, 3), self.c3)
        self.assertEqual(dot_h(2, 3), self.g3)
        self.assertEqual(rell_from_osym(osym.OSymElem.one(), 3), 1)
        self.assertTrue(dot_h(-1, 3).is_zero())

    def test_complete_even(self):
        g1, g2 = REllElem.g(1, 4), REllElem.g(2, 4)
        self.assertEqual(complete_even(0, 4), 1)
        self.assertEqual(complete_even(1, 4), g1)
        self.assertEqual(complete_even(2, 4), g1 * g1 - g2)

    def test_gradings(self):
        self.assertEqual((self.g3 * self.c3).degree(), 6)
        self.assertEqual((self.g3 * self.c3).parity(), 1)
        with self.assertRaises(ValueError):
            (self.g3 + self.c3).parity()

    def test_dimension(self):
        self.assertEqual(rell_dimension(3, 4), GPScalar({(0, 0): 1, (2, 1): 1, (4, 0): 1}))
        self.assertEqual(rell_dimension(2, 6), GPScalar({(0, 0): 1, (2, 1): 1, (4, 0): 1}))

    def test_retruncate(self):
        x = self.g3 * self.c3 + self.c3
        self.assertEqual(x.retruncate(1), REllElem.c(1))

    def test_json(self):
        x = self.g3.scale(2) - self.c3
        self.assertEqual(REllElem.from_json(x.to_json()), x)
        with self.assertRaises(ValueError):
            REllElem.from_json({'ell': 3})
        with self.assertRaises(ValueError):
            REllElem(3, {((1, 1), 0): 1})


class TestOddGrassmannianCohomology(unittest.TestCase):
    """Test cases for OH_n^ell"""

    def setUp(self):
        """Set up test fixtures"""
        self.s1 = oh_from_schur((1,), 1, 2)
        self.c = oh_from_rell(REllElem.c(2), 1)

    def test_ranks(self):
        """Graded rank is q^{nn'} times the binomial coefficient"""
        self.assertEqual(str(oh_rank(1, 2)), '1 + q^2*pi')
        self.assertEqual(oh_rank(2, 4), GPScalar({(0, 0): 1, (2, 1): 1, (4, 0): 2, (6, 1): 1, (8, 0): 1}))
        for ell in range(5):
            for n in range(ell + 1):
                with self.subTest(n=n, ell=ell):
                    self.assertEqual(oh_rank(n, ell), expected_oh_rank(n, ell))

    def test_basis_and_top(self):
        self.assertEqual(oh_basis(1, 2), [(), (1,)])
        self.assertEqual(top_partition(2, 5), (3, 3))
        with self.assertRaises(ValueError):
            oh_basis(3, 2)

    def test_box_is_enforced(self):
        with self.assertRaises(ValueError):
            OHElem(1, 2, {((2,), ((0,), 0)): 1})
        self.assertTrue(oh_from_schur((1, 1), 1, 2).is_zero())

    def test_units(self):
        self.assertEqual(oh_one(1, 2), oh_from_osym(osym.OSymElem.one(), 1, 2))
        self.assertEqual(oh_mul(oh_one(1, 2), self.s1), self.s1)
        with self.assertRaises(ValueError):
            oh_mul(oh_one(1, 2), oh_one(1, 3))

    def test_trace(self):
        """The trace picks the coefficient of the top rectangle"""
        self.assertEqual(oh_trace(self.s1), 1)
        self.assertTrue(oh_trace(oh_one(1, 2)).is_zero())

    def test_trace_gram(self):
        """s_lambda pairs with its complement in the box"""
        basis, matrix = trace_gram(1, 2)
        self.assertEqual(basis, [(), (1,)])
        self.assertEqual(matrix, [[0, 1], [1, 0]])
        for n, ell in [(1, 2), (1, 3), (2, 3), (2, 4)]:
            with self.subTest(n=n, ell=ell):
                self.assertIsNone(gram_pairing_check(n, ell))

    def test_sign_function(self):
        """Both readings of sgn agree"""
        self.assertEqual(sgn_function((1,), 1, 2), -1)
        for mu in [(), (1,), (1, 1)]:
            with self.subTest(mu=mu):
                self.assertEqual(sgn_function(mu, 1, 3), sgn_from_lr(mu, 1, 3))
        with self.assertRaises(ValueError):
            sgn_function((2,), 1, 2)

    def test_psi_isomorphism(self):
        """psi(s_1) = s_1 + c and psi^-1 undoes it"""
        image = psi_iso(self.s1)
        self.assertEqual(image, self.s1 + self.c)
        self.assertEqual(psi_iso(image, 'inverse'), self.s1)
        with self.assertRaises(ValueError):
            psi_iso(self.s1, 'sideways')

    def test_delta(self):
        """delta(h_1) = h_1 + 2 (1 (x) o) in OH_1^2"""
        self.assertEqual(delta_auto(self.s1), self.s1 + self.c.scale(2))
        self.assertEqual(delta_closed('h', 1, 1, 2), delta_auto(self.s1))
        with self.assertRaises(ValueError):
            delta_closed('m', 1, 1, 2)
        with self.assertRaises(ValueError):
            delta_closed('h', 0, 1, 2)

    def test_normalize_and_specialize(self):
        """Normal form from raw Schur terms, and the image over the ground ring"""
        raw = oh_normalize({(): REllElem.c(2), (1,): 1}, 1, 2)
        self.assertEqual(raw, self.s1 + self.c)
        self.assertEqual(oh_bar(raw), {(1,): 1})
        self.assertEqual(oh_bar(oh_one(1, 2)), {(): 1})
        with self.assertRaises(ValueError):
            oh_normalize({(1, 1): 1}, 1, 2)

    def test_alpha(self):
        """alpha keeps the R_ell coefficient of the unit, retruncated"""
        self.assertEqual(alpha(self.s1 + self.c), REllElem.c(1))
        self.assertEqual(alpha(oh_one(1, 2)), 1)

    def test_json(self):
        x = self.s1 + self.c
        self.assertEqual(OHElem.from_json(x.to_json()), x)
        with self.assertRaises(ValueError):
            OHElem.from_json({'n': 1})


if __name__ == '__main__':
    unittest.main()
