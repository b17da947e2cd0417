"""
Unit tests for the (q, pi) scalar arithmetic
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.errors import InternalError
from oddgrass.qpi_scalars import (GPScalar, bc_poly, generating_product, poincare_sum, q_power,
                                  qp_binom, qp_binom_by_division, qp_factorial, qp_int,
                                  qp_multinom, qp_trinom)


class TestGPScalar(unittest.TestCase):
    """Test cases for the GPScalar ring"""

    def setUp(self):
        """Set up test fixtures"""
        self.two = GPScalar({(-1, 0): 1, (1, 1): 1})
        self.pi = GPScalar.monomial(0, 1)

    def test_pi_squares_to_one(self):
        """pi * pi is the unit"""
        self.assertEqual(self.pi * self.pi, 1)
        self.assertEqual(q_power(1, 1) * q_power(-1, 1), GPScalar.coerce(1))

    def test_zero_terms_are_dropped(self):
        """Cancelling terms leave the zero scalar"""
        zero = self.two - self.two
        self.assertTrue(zero.is_zero())
        self.assertFalse(zero)
        self.assertEqual(str(zero), '0')

    def test_text_form(self):
        """Terms are sorted by q-degree with pi written after q"""
        self.assertEqual(str(self.two), 'q^-1 + q*pi')
        self.assertEqual(str(GPScalar({(0, 0): 1, (2, 0): -1})), '1 - q^2')
        self.assertEqual(str(GPScalar({(2, 1): 3})), '3*q^2*pi')

    def test_bar_inverts_q(self):
        """The bar involution sends q to q^-1 and fixes pi"""
        self.assertEqual(q_power(2, 1).bar(), q_power(-2, 1))
        self.assertEqual(self.two.bar().bar(), self.two)

    def test_scale(self):
        """Scaling multiplies by a monomial"""
        self.assertEqual(self.two.scale(d=1), GPScalar({(0, 0): 1, (2, 1): 1}))
        self.assertEqual(self.pi.scale(p=1), 1)

    def test_specializations(self):
        """Evaluating at pi = 1 and pi = -1 and recombining"""
        self.assertEqual(self.two.specialize(1), {-1: 1, 1: 1})
        self.assertEqual(self.two.specialize(-1), {-1: 1, 1: -1})
        recombined = GPScalar.from_specializations(self.two.specialize(1), self.two.specialize(-1))
        self.assertEqual(recombined, self.two)

    def test_invalid_specialization(self):
        """pi only specializes to a sign"""
        with self.assertRaises(ValueError):
            self.two.specialize(2)
        with self.assertRaises(InternalError):
            GPScalar.from_specializations({0: 1}, {0: 0})

    def test_exact_division(self):
        """Exact quotients are recovered, remainders are reported"""
        self.assertEqual((qp_int(2) * qp_int(3)).exact_divide(qp_int(3)), qp_int(2))
        with self.assertRaises(InternalError):
            qp_int(3).exact_divide(qp_int(2))
        with self.assertRaises(ZeroDivisionError):
            qp_int(3).exact_divide(GPScalar())

    def test_json(self):
        """JSON form is a sorted list of terms"""
        self.assertEqual(self.two.to_json(), [{'d': -1, 'p': 0, 'c': 1}, {'d': 1, 'p': 1, 'c': 1}])
        self.assertEqual(GPScalar.from_json(self.two.to_json()), self.two)
        with self.assertRaises(ValueError):
            GPScalar.from_json([{'d': 0}])

    def test_rank_helpers(self):
        """Graded ranks have nonnegative coefficients"""
        self.assertTrue(qp_int(3).is_graded_rank())
        self.assertFalse(qp_int(-1).is_graded_rank())
        self.assertEqual(qp_int(3).dimension(), 3)

    def test_coerce_rejects_other_types(self):
        """Only integers and GPScalars are coerced"""
        with self.assertRaises(TypeError):
            GPScalar.coerce('q')


class TestQPiCombinatorics(unittest.TestCase):
    """Test cases for (q, pi)-integers, binomials and friends"""

    def test_integers(self):
        """[n] for small n, including negative n"""
        self.assertEqual(qp_int(0), 0)
        self.assertEqual(qp_int(1), 1)
        self.assertEqual(qp_int(2), GPScalar({(-1, 0): 1, (1, 1): 1}))
        self.assertEqual(qp_int(3), GPScalar({(-2, 0): 1, (0, 1): 1, (2, 0): 1}))
        self.assertEqual(qp_int(-1), GPScalar({(0, 1): -1}))

    def test_binomials(self):
        """Binomials from the Pascal recursion"""
        self.assertEqual(qp_binom(2, 1), qp_int(2))
        self.assertEqual(qp_binom(3, 1), qp_int(3))
        self.assertEqual(qp_binom(3, 2), qp_int(3))
        self.assertEqual(qp_binom(-1, 1), GPScalar({(0, 1): -1}))
        self.assertEqual(qp_binom(2, 3), 0)
        self.assertEqual(qp_binom(2, -1), 0)
        self.assertEqual(qp_binom(5, 0), 1)

    def test_binomials_by_division(self):
        """The quotient of factorials agrees with the recursion"""
        for n, r in [(2, 1), (3, 1), (3, 2), (4, 0)]:
            with self.subTest(n=n, r=r):
                self.assertEqual(qp_binom_by_division(n, r), qp_binom(n, r))

    def test_factorial(self):
        """[3]! = [2][3] and matches the length generating function"""
        self.assertEqual(qp_factorial(3), qp_int(2) * qp_int(3))
        self.assertEqual(str(qp_factorial(3)), 'q^-3 + 2*q^-1*pi + 2*q + q^3*pi')
        for n in range(4):
            with self.subTest(n=n):
                self.assertEqual(poincare_sum(n), qp_factorial(n))
        with self.assertRaises(ValueError):
            qp_factorial(-1)

    def test_trinomial_and_multinomial(self):
        """Products of binomials"""
        self.assertEqual(qp_trinom(2, 1, 1), qp_int(2))
        self.assertEqual(qp_multinom(3, [1, 2]), qp_binom(3, 1))
        self.assertEqual(qp_multinom(3, [1, 1, 1]), qp_factorial(3))
        with self.assertRaises(ValueError):
            qp_multinom(3, [1, 1])
        with self.assertRaises(ValueError):
            qp_multinom(3, [4, -1])

    def test_generating_product(self):
        """Coefficients of the product of the linear factors"""
        coeffs = generating_product(2)
        self.assertEqual(len(coeffs), 3)
        self.assertEqual(coeffs[0], 1)
        self.assertEqual(coeffs[1], qp_int(2))
        self.assertEqual(coeffs[2], GPScalar.monomial(0, 1))

    def test_bc_polynomials(self):
        """Small values of the b and c dimensions"""
        self.assertEqual(bc_poly(1, 1, 0, 'c'), 1)
        self.assertEqual(bc_poly(1, 1, 0, 'b'), 0)
        self.assertEqual(bc_poly(1, 1, 1, 'b'), 1)
        self.assertEqual(bc_poly(1, 1, 1, 'c'), GPScalar({(0, 0): 1, (2, 1): 1}))
        self.assertEqual(str(bc_poly(1, 1, 1, 'c')), '1 + q^2*pi')

    def test_bc_invalid_arguments(self):
        """Bad selectors and negative r are rejected"""
        with self.assertRaises(ValueError):
            bc_poly(1, 1, -1, 'c')
        with self.assertRaises(ValueError):
            bc_poly(1, 1, 0, 'x')


if __name__ == '__main__':
    unittest.main()
