"""
Unit tests for the rank-one odd Grassmannian bimodules
"""

import unittest
import random
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.bimodules import (REDUCTION_METHODS, BimodVec, TensorChain, TruncSeries, VUTensor,
                                bar_generator, basis_grading, chain_nilhecke_defect, coev,
                                coev_centrality_defect, coev_collapsed, dual_index, ev,
                                ev_balanced_defect, ev_pair, graded_rank, koszul_sign, mate_defect,
                                nilhecke_on_chain, oh_generators, schur_action_defect, sigma,
                                tilde_ev, tilde_zigzag_defect, twist, u_reduce, u_right_mul,
                                v_left_mul, v_reduce, zigzag_defect)
from oddgrass.errors import InternalError
from oddgrass.grass_cohomology import REllElem, oh_from_rell, oh_from_schur, oh_one
from oddgrass.onh import ONHWord
from oddgrass.qpi_scalars import GPScalar


class TestBimoduleVectors(unittest.TestCase):
    """Test cases for vectors of V_n^ell and U_n^ell"""

    def test_indices_and_gradings(self):
        """n' = ell - n - 1 and the shifted basis gradings"""
        self.assertEqual(dual_index(1, 3), 1)
        self.assertEqual(basis_grading('V', 1, 3, 2), (2, 1))
        self.assertEqual(basis_grading('V', 1, 3, 2, tilde=True), (4, 0))
        self.assertEqual(basis_grading('U', 1, 3, 1), (2, 1))
        self.assertEqual(basis_grading('U', 1, 3, 1, tilde=True), (0, 0))

    def test_graded_ranks(self):
        self.assertEqual(graded_rank('U', 'left', 0, 2), 1)
        self.assertEqual(graded_rank('U', 'right', 0, 2), GPScalar({(0, 0): 1, (2, 1): 1}))
        self.assertEqual(graded_rank('V', 'left', 0, 2), GPScalar({(0, 0): 1, (2, 1): 1}))
        self.assertEqual(graded_rank('V', 'right', 1, 3), GPScalar({(-2, 1): 1, (0, 0): 1}))
        with self.assertRaises(ValueError):
            graded_rank('W', 'left', 0, 2)
        with self.assertRaises(ValueError):
            graded_rank('V', 'up', 0, 2)

    def test_construction(self):
        vec = BimodVec.basis('V', 1, 2, 0)
        self.assertEqual(vec.coeffs[0], oh_one(2, 2))
        self.assertTrue(vec.coeffs[1].is_zero())
        self.assertEqual(vec.n_prime, 0)
        with self.assertRaises(ValueError):
            BimodVec('X', 0, 1)
        with self.assertRaises(ValueError):
            BimodVec('V', 2, 2)
        with self.assertRaises(ValueError):
            BimodVec('V', 1, 2, [oh_one(2, 2)])
        with self.assertRaises(ValueError):
            BimodVec.basis('U', 0, 2, -1)

    def test_vector_arithmetic(self):
        a = BimodVec.basis('U', 1, 3, 0)
        b = BimodVec.basis('U', 1, 3, 1)
        self.assertTrue((a - a).is_zero())
        self.assertEqual((a + b).scale(2) - b.scale(2), a.scale(2))
        with self.assertRaises(ValueError):
            a + BimodVec.basis('V', 1, 3, 0)

    def test_json(self):
        vec = BimodVec.basis('U', 1, 3, 1)
        self.assertEqual(BimodVec.from_json(vec.to_json()), vec)
        with self.assertRaises(ValueError):
            BimodVec.from_json({'kind': 'U'})

    def test_twist(self):
        """The parity twist flips odd pieces only"""
        a = oh_from_schur((1,), 1, 2) + oh_from_rell(REllElem.c(2), 1)
        self.assertEqual(twist(a, 1), a.scale(-1))
        self.assertEqual(twist(a, 2), a)
        self.assertEqual(twist(oh_one(1, 2), 1), oh_one(1, 2))
        self.assertEqual(koszul_sign(1, 1), -1)
        self.assertEqual(koszul_sign(1, 2), 1)

    def test_unit_actions(self):
        v = BimodVec.basis('V', 1, 2, 1)
        u = BimodVec.basis('U', 1, 2, 1)
        self.assertEqual(v_left_mul(oh_one(1, 2), v), v)
        self.assertEqual(u_right_mul(u, oh_one(1, 2)), u)
        with self.assertRaises(ValueError):
            v_left_mul(oh_one(2, 2), v)
        with self.assertRaises(ValueError):
            u_right_mul(v, oh_one(1, 2))

    def test_generators(self):
        labels = [label for label, _ in oh_generators(1, 2)]
        self.assertEqual(labels, ['eps1', 'c', 'g1'])
        self.assertTrue(bar_generator('eps', -1, 1, 2).is_zero())
        with self.assertRaises(ValueError):
            bar_generator('x', 1, 1, 2)


class TestReductions(unittest.TestCase):
    """Test cases for expanding v(x^p) and u(x^p) in the free bases"""

    def test_small_exponents_are_basis_vectors(self):
        for q in range(2):
            with self.subTest(q=q):
                self.assertEqual(v_reduce(1, 2, q), BimodVec.basis('V', 1, 2, q))
                self.assertEqual(u_reduce(1, 2, q), BimodVec.basis('U', 1, 2, q))

    def test_x_acts_through_c(self):
        """In V_0^1 the first overflow is v(x) = v(1) c"""
        c = oh_from_rell(REllElem.c(1), 1)
        self.assertEqual(v_reduce(0, 1, 1), BimodVec('V', 0, 1, [c]))

    def test_reduction_routes_agree(self):
        """Recursion, series extraction and polynomial splitting coincide"""
        for n, ell in [(0, 1), (0, 2), (1, 2)]:
            for p in range(n + 1, n + 3):
                with self.subTest(n=n, ell=ell, p=p):
                    expected_v = v_reduce(n, ell, p, 'recursion')
                    expected_u = u_reduce(n, ell, p, 'recursion')
                    for method in REDUCTION_METHODS[1:]:
                        self.assertEqual(v_reduce(n, ell, p, method), expected_v)
                        self.assertEqual(u_reduce(n, ell, p, method), expected_u)

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            v_reduce(0, 1, 2, method='guess')

    def test_series_window(self):
        series = TruncSeries.family('eps', 1, 2, 2)
        self.assertEqual(series.coefficient(0), oh_one(1, 2))
        with self.assertRaises(InternalError):
            series.coefficient(3)
        with self.assertRaises(InternalError):
            series.truncate(3)
        self.assertIsNone(series.truncate(1).hi)


class TestAdjunctions(unittest.TestCase):
    """Test cases for ev, coev, their tilde versions and the crossing"""

    def setUp(self):
        """Set up test fixtures"""
        self.pairs = [(0, 1), (0, 2), (1, 2)]

    def test_ev_values(self):
        self.assertTrue(ev(1, 2, 0, 0).is_zero())
        self.assertEqual(ev(1, 2, 1, 0), oh_one(2, 2))
        u, v = BimodVec.basis('U', 0, 2, 0), BimodVec.basis('V', 0, 2, 0)
        self.assertEqual(ev_pair(u, v), oh_one(1, 2))

    def test_coev(self):
        """coev_0 is a single term; coev_1 has one term per r + s <= 1"""
        self.assertEqual(coev(0, 2), VUTensor(0, 2, {(0, 0): oh_one(1, 2)}))
        unit = coev(1, 2)
        self.assertEqual(set(unit.coeffs), {(0, 0), (0, 1), (1, 0)})
        self.assertEqual(unit.coeffs[(0, 1)], oh_one(2, 2))
        self.assertEqual(unit.coeffs[(1, 0)], oh_one(2, 2))

    def test_coev_collapsed_forms(self):
        for n, ell in self.pairs:
            with self.subTest(n=n, ell=ell):
                self.assertEqual(coev_collapsed(n, ell, 'right'), coev(n, ell))
                self.assertEqual(coev_collapsed(n, ell, 'left'), coev(n, ell))
        with self.assertRaises(ValueError):
            coev_collapsed(0, 2, 'middle')

    def test_first_adjunction(self):
        """Zigzags, balance of ev and centrality of coev"""
        for n, ell in self.pairs:
            with self.subTest(n=n, ell=ell):
                self.assertIsNone(zigzag_defect(n, ell))
                self.assertIsNone(ev_balanced_defect(n, ell))
                self.assertIsNone(coev_centrality_defect(n, ell))

    def test_second_adjunction(self):
        for n, ell in self.pairs:
            with self.subTest(n=n, ell=ell):
                self.assertIsNone(tilde_zigzag_defect(n, ell))

    def test_tilde_ev_values(self):
        """The tilde counit vanishes below n' and is a signed unit at n'"""
        self.assertTrue(tilde_ev(0, 2, 0, 0).is_zero())
        self.assertEqual(tilde_ev(0, 2, 1, 0), oh_one(0, 2))
        self.assertEqual(tilde_ev(0, 2, 0, 1), oh_one(0, 2).scale(-1))

    def test_schur_action_routes(self):
        self.assertIsNone(schur_action_defect(1, 2, 2))

    def test_mate(self):
        for n, ell in self.pairs:
            with self.subTest(n=n, ell=ell):
                self.assertIsNone(mate_defect(n, ell))

    def test_crossing(self):
        """sigma(u(1) (x) v(1)) = v(1) (x) u(1) in the smallest case"""
        self.assertEqual(sigma(1, 2, 0, 0), VUTensor(1, 2, {(0, 0): oh_one(2, 2)}))
        with self.assertRaises(ValueError):
            sigma(1, 2, 0, 1)
        with self.assertRaises(ValueError):
            sigma(0, 2, 0, 0)

    def test_crossing_single_term(self):
        """For r + s < n only the leading term survives, with sign (-1)^{nr+rs+r+s+n+1}"""
        cases = [
            ((2, 3, 0, 0), {(0, 0): -1}),
            ((2, 3, 1, 0), {(0, 1): 1}),
            ((2, 3, 0, 1), {(1, 0): 1}),
        ]
        for (n, ell, r, s), expected in cases:
            with self.subTest(n=n, r=r, s=s):
                coeffs = {key: oh_one(n + 1, ell).scale(c) for key, c in expected.items()}
                self.assertEqual(sigma(n, ell, r, s), VUTensor(n, ell, coeffs))

    def test_crossing_with_correction(self):
        """For r + s = n the double sum contributes -v(x^n) (x) u(1) and terms through v(1)"""
        crossed = sigma(1, 2, 1, 0)
        self.assertEqual(crossed.coeffs[(1, 0)], oh_one(2, 2).scale(-1))
        self.assertTrue(set(crossed.coeffs) <= {(0, 0), (0, 1), (1, 0)})
        self.assertGreater(len(crossed.coeffs), 1)

    def test_tensor_index_range(self):
        with self.assertRaises(ValueError):
            VUTensor(1, 2, {(2, 0): oh_one(2, 2)})


class TestTensorChains(unittest.TestCase):
    """Test cases for tensor powers and the nil-Hecke action on them"""

    def test_single_factor(self):
        chain = TensorChain.basis('U', 0, 2, (0,))
        self.assertEqual(chain.coeffs, {(0,): oh_one(1, 2)})
        self.assertEqual(chain.outer, 1)

    def test_invalid_chains(self):
        with self.assertRaises(ValueError):
            TensorChain('U', 0, 2, 0)
        with self.assertRaises(ValueError):
            TensorChain('U', 1, 2, 2)
        with self.assertRaises(ValueError):
            TensorChain('V', 0, 2, 1, {(1,): oh_one(1, 2)})

    def test_action_arguments(self):
        chain = TensorChain.basis('U', 0, 2, (0,))
        word = ONHWord(1, [('x', 1)])
        with self.assertRaises(ValueError):
            nilhecke_on_chain(chain, word, 'mu')
        with self.assertRaises(ValueError):
            nilhecke_on_chain(chain, word, 'lambda')
        with self.assertRaises(ValueError):
            nilhecke_on_chain(chain, ONHWord(2, [('x', 1)]), 'rho')

    def test_tau_squares_to_zero(self):
        """tau_1 tau_1 kills random combinations of length-two chains on both sides"""
        rng = random.Random(0)
        tau_twice = ONHWord(2, [('t', 1), ('t', 1)])
        for side, kind in (('rho', 'U'), ('lambda', 'V')):
            for n, ell in [(0, 2), (0, 3), (1, 3)]:
                with self.subTest(side=side, n=n, ell=ell):
                    chain = TensorChain(kind, n, ell, 2)
                    for _ in range(4):
                        kappa = (rng.randint(0, n + 2), rng.randint(0, n + 2))
                        chain = chain + TensorChain.basis(kind, n, ell, kappa).scale(rng.randint(-3, 3))
                    self.assertTrue(nilhecke_on_chain(chain, tau_twice, side).is_zero())

    def test_idempotents(self):
        """(xi omega)_2 = x1 tau1 and (omega xi)_2 = tau1 x1 act idempotently for ell <= 3"""
        words = [ONHWord(2, [('x', 1), ('t', 1)]), ONHWord(2, [('t', 1), ('x', 1)])]
        for side, kind in (('rho', 'U'), ('lambda', 'V')):
            for n, ell in [(0, 2), (0, 3), (1, 3)]:
                for word in words:
                    with self.subTest(side=side, n=n, ell=ell, word=str(word)):
                        images = []
                        for k1 in range(n + 1):
                            for k2 in range(n + 2):
                                image = nilhecke_on_chain(TensorChain.basis(kind, n, ell, (k1, k2)), word, side)
                                self.assertEqual(nilhecke_on_chain(image, word, side), image)
                                images.append(image)
                        self.assertTrue(any(not image.is_zero() for image in images))

    def test_chain_nilhecke_check(self):
        for n, ell in [(0, 1), (0, 2), (1, 3)]:
            with self.subTest(n=n, ell=ell):
                self.assertIsNone(chain_nilhecke_defect(n, ell))


if __name__ == '__main__':
    unittest.main()
