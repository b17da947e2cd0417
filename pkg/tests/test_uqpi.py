"""
Unit tests for V(-ell) over the covering quantum group
"""

import unittest
import random
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.bimodules import graded_rank
from oddgrass.qpi_scalars import GPScalar, q_power, qp_int
from oddgrass.uqpi import (VModule, act_div, commutator_defect, divided_power,
                           divided_power_defect, euler_target, k0_dictionary, power, random_vector,
                           reflection_coefficient, t_coefficient, t_op, varpi)


class TestVModule(unittest.TestCase):
    """Test cases for vectors of V(-ell)"""

    def test_basis_and_weights(self):
        b = VModule.basis(2, 1)
        self.assertEqual(b.coords, [0, 1, 0])
        self.assertEqual(b.weight_of(0), -2)
        self.assertEqual(b.weight_of(2), 2)
        self.assertEqual(b.weight_component(0), b)
        self.assertTrue(b.weight_component(2).is_zero())

    def test_invalid_vectors(self):
        with self.assertRaises(ValueError):
            VModule(2, [1])
        with self.assertRaises(ValueError):
            VModule.basis(2, 3)
        with self.assertRaises(ValueError):
            VModule(-1)
        with self.assertRaises(ValueError):
            VModule.basis(2, 0).weight_component(1)

    def test_arithmetic_and_json(self):
        v = VModule.basis(2, 0).scale(q_power(1)) - VModule.basis(2, 2)
        self.assertEqual(str(v), '(q)*b0 + (-1)*b2')
        self.assertEqual(VModule.from_json(v.to_json()), v)
        with self.assertRaises(ValueError):
            VModule.from_json({'ell': 2})
        with self.assertRaises(ValueError):
            v + VModule.basis(1, 0)


class TestDividedPowers(unittest.TestCase):
    """Test cases for E^(d) and F^(d)"""

    def test_coefficients(self):
        """E raises by [n+1], F lowers by pi^n [ell-n]"""
        self.assertEqual(act_div(2, 'E', 1, 0), 1)
        self.assertEqual(act_div(2, 'E', 1, 1), qp_int(2))
        self.assertEqual(act_div(2, 'F', 1, 0), qp_int(2))
        self.assertEqual(act_div(2, 'F', 1, 1), q_power(0, 1))
        self.assertTrue(act_div(2, 'E', 1, 2).is_zero())
        with self.assertRaises(ValueError):
            act_div(2, 'G', 1, 0)

    def test_action_on_vectors(self):
        b0 = VModule.basis(2, 0)
        self.assertEqual(divided_power('E', 1, b0), VModule.basis(2, 1))
        self.assertEqual(divided_power('E', 2, b0), VModule.basis(2, 2))
        self.assertEqual(power('E', 2, b0), VModule.basis(2, 2).scale(qp_int(2)))
        self.assertTrue(divided_power('F', 1, b0).is_zero())
        with self.assertRaises(ValueError):
            divided_power('H', 1, b0)

    def test_commutator(self):
        """EF - pi FE = bar([k]) on every weight space"""
        for ell in range(5):
            with self.subTest(ell=ell):
                self.assertIsNone(commutator_defect(ell))

    def test_divided_powers(self):
        for ell in range(1, 5):
            for d in range(1, 4):
                with self.subTest(ell=ell, d=d):
                    self.assertIsNone(divided_power_defect(ell, d))


class TestReflection(unittest.TestCase):
    """Test cases for the braid operator and its Grothendieck group values"""

    def test_t_on_basis(self):
        """T b_0 = b_1 and T b_1 = -q b_0 in V(-1)"""
        self.assertEqual(t_op(VModule.basis(1, 0)), VModule.basis(1, 1))
        self.assertEqual(t_op(VModule.basis(1, 1)), VModule.basis(1, 0).scale(GPScalar({(1, 0): -1})))
        self.assertEqual(t_coefficient(1, 0), 1)
        self.assertEqual(t_coefficient(1, 1), GPScalar({(1, 0): -1}))

    def test_t_coefficient_matches_operator(self):
        for ell in range(4):
            for n in range(ell + 1):
                with self.subTest(ell=ell, n=n):
                    image = t_op(VModule.basis(ell, n))
                    expected = VModule.basis(ell, ell - n).scale(t_coefficient(ell, n))
                    self.assertEqual(image, expected)

    def test_inverse(self):
        """T^-1 undoes T on random vectors"""
        rng = random.Random(3)
        for ell in range(4):
            v = random_vector(ell, rng)
            with self.subTest(ell=ell):
                self.assertEqual(t_op(t_op(v), 'inverse'), v)
        with self.assertRaises(ValueError):
            t_op(VModule.basis(1, 0), 'sideways')

    def test_varpi_is_an_involution(self):
        rng = random.Random(5)
        for ell in range(4):
            v = random_vector(ell, rng)
            with self.subTest(ell=ell):
                self.assertEqual(varpi(varpi(v)), v)

    def test_euler_targets(self):
        self.assertEqual(euler_target(2, 0), GPScalar({(2, 1): -1}))
        self.assertEqual(euler_target(3, 1), GPScalar({(4, 0): -1}))
        self.assertEqual(euler_target(1, 1), 1)
        self.assertEqual(reflection_coefficient(3, 1), GPScalar({(3, 0): -1}))
        with self.assertRaises(ValueError):
            reflection_coefficient(2, 1)

    def test_k0_dictionary(self):
        """The shadows of E and F are the graded ranks of U and V"""
        self.assertEqual(k0_dictionary(2, 0), {'E': 1, 'F': GPScalar({(0, 0): 1, (2, 1): 1})})
        for ell in range(1, 4):
            for n in range(ell):
                with self.subTest(ell=ell, n=n):
                    shadows = k0_dictionary(ell, n)
                    self.assertEqual(shadows['E'], graded_rank('U', 'left', n, ell))
                    self.assertEqual(shadows['F'], graded_rank('V', 'left', n, ell))
        with self.assertRaises(ValueError):
            k0_dictionary(2, 2)


if __name__ == '__main__':
    unittest.main()
