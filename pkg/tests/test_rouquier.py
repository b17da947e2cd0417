"""
Unit tests for the specialized singular Rouquier complex
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.qpi_scalars import GPScalar
from oddgrass.rouquier import (GradedSpace, admissible_pairs, build_complex, chain_differential_column,
                               check_admissible, differential_column, differential_rows,
                               homological_degrees, homology, initial_pairs, lower_raise, tensor_route_defect,
                               term_space, verify_src)


class TestAdmissibility(unittest.TestCase):
    """Test cases for the (ell, k) bookkeeping"""

    def test_check_admissible(self):
        self.assertEqual(check_admissible(3, 1), 1)
        self.assertEqual(check_admissible(0, 0), 0)
        for ell, k in [(2, 1), (1, 3), (-1, 1), (2, -4)]:
            with self.subTest(ell=ell, k=k):
                with self.assertRaises(ValueError):
                    check_admissible(ell, k)

    def test_degrees(self):
        """Terms run from max(0, -k) to n"""
        self.assertEqual(homological_degrees(3, -1), [1, 2])
        self.assertEqual(homological_degrees(2, 0), [0, 1])
        self.assertEqual(homological_degrees(1, 1), [0])

    def test_admissible_pairs(self):
        self.assertEqual(admissible_pairs(1), [(0, 0), (1, -1), (1, 1)])
        self.assertEqual(len(admissible_pairs(3)), 10)


class TestGradedSpaces(unittest.TestCase):
    """Test cases for the graded terms of the complex"""

    def test_term_space(self):
        space = term_space(2, 0, 1)
        self.assertEqual(space.labels, [((), ()), ((1,), ())])
        self.assertEqual(space.gradings, [(0, 0), (2, 1)])
        self.assertEqual(space.superdimension(), GPScalar({(0, 0): 1, (2, 1): 1}))
        self.assertEqual(space.blocks(), {(0, 0): [0], (2, 1): [1]})

    def test_outside_degrees_is_empty(self):
        self.assertEqual(term_space(2, 0, 2).dimension(), 0)

    def test_mismatched_gradings(self):
        with self.assertRaises(ValueError):
            GradedSpace(['a', 'b'], [(0, 0)])


class TestComplex(unittest.TestCase):
    """Test cases for the differential and the homology"""

    def test_smallest_nontrivial_case(self):
        """ell = 2, k = 0: homology pi q^2 in degree 1"""
        complex_ = build_complex(2, 0)
        self.assertEqual(complex_.degrees, [0, 1])
        self.assertEqual(complex_.rank(1), 1)
        self.assertIsNone(complex_.square_defect())
        groups = homology(complex_)
        self.assertEqual(groups[0], 0)
        self.assertEqual(groups[1], GPScalar({(2, 1): 1}))
        self.assertEqual(complex_.euler_characteristic(), GPScalar({(2, 1): -1}))

    def test_positive_weight(self):
        """ell = 3, k = 1: homology q^4 in degree 1"""
        groups = homology(build_complex(3, 1))
        self.assertEqual(groups[0], 0)
        self.assertEqual(groups[1], GPScalar({(4, 0): 1}))

    def test_single_term_complexes(self):
        for ell, k, d in [(1, 1, 0), (1, -1, 1), (0, 0, 0)]:
            with self.subTest(ell=ell, k=k):
                complex_ = build_complex(ell, k)
                self.assertEqual(complex_.degrees, [d])
                self.assertEqual(homology(complex_), {d: GPScalar({(0, 0): 1})})

    def test_differential_rows(self):
        header, rows = differential_rows(build_complex(2, 0), 1)
        self.assertEqual(header, ['target', 'w(0;0)', 'w(1;0)'])
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0][0], 'w(0;0)')
        self.assertEqual(abs(rows[0][1]), 1)
        self.assertEqual(rows[0][2], 0)

    def test_json(self):
        data = build_complex(2, 0).to_json()
        self.assertEqual(data['n'], 1)
        self.assertEqual([term['d'] for term in data['terms']], [0, 1])
        self.assertEqual(data['terms'][1]['superdimension'], '1 + q^2*pi')

    def test_invalid_parameters(self):
        with self.assertRaises(ValueError):
            build_complex(2, 1)


class TestExactness(unittest.TestCase):
    """Test cases for the leading-term bookkeeping and the full check list"""

    def test_initial_pairs(self):
        self.assertEqual(initial_pairs(2, 0, 1), [((), (), 0)])

    def test_lower_raise(self):
        self.assertEqual(lower_raise((2, 1), (1,), 0, 1), ((2,), ()))
        self.assertEqual(lower_raise((0,), (), 0, 1), ((), ()))

    def test_verify_small_cases(self):
        """Every check holds for ell <= 3"""
        for ell, k in admissible_pairs(3):
            with self.subTest(ell=ell, k=k):
                report = verify_src(ell, k)
                self.assertTrue(report['passed'], [c for c in report['checks'] if not c['passed']])

    def test_triangularity_for_negative_weight(self):
        """Initial pairs lead with +-w(lambda^-, mu^+) for k < 0 as well"""
        for ell, k in [(1, -1), (3, -1), (4, -2)]:
            with self.subTest(ell=ell, k=k):
                checks = {check['name']: check for check in verify_src(ell, k)['checks']}
                self.assertIn('triangularity', checks)
                self.assertTrue(checks['triangularity']['passed'], checks['triangularity']['witness'])

    def test_report_fields(self):
        report = verify_src(2, 0)
        self.assertEqual(report['n'], 1)
        self.assertEqual(report['homology'], {'0': '0', '1': 'q^2*pi'})
        self.assertEqual(report['euler'], '-q^2*pi')
        self.assertEqual(report['ranks'], {'0': 0, '1': 1})


class TestTensorRoute(unittest.TestCase):
    """Test cases for the differential assembled inside rank-one tensor chains"""

    def test_smallest_columns(self):
        self.assertEqual(chain_differential_column(2, 0, 1, (), ()), {((), ()): 1})
        self.assertEqual(chain_differential_column(2, 0, 1, (1,), ()), {})

    def test_matches_trains_up_to_sign(self):
        for lam in [(), (1,)]:
            with self.subTest(lam=lam):
                trains = differential_column(2, 0, 1, lam, ())
                chained = chain_differential_column(2, 0, 1, lam, ())
                self.assertEqual({key: abs(c) for key, c in trains.items()},
                                 {key: abs(c) for key, c in chained.items()})

    def test_degree_range(self):
        with self.assertRaises(ValueError):
            chain_differential_column(2, 0, 0, (), ())
        with self.assertRaises(ValueError):
            chain_differential_column(6, 0, 3, (), ())

    def test_routes_agree(self):
        """The tensor_route check is recorded and passes for ell <= 3"""
        for ell, k in admissible_pairs(3):
            with self.subTest(ell=ell, k=k):
                checks = {check['name']: check for check in verify_src(ell, k)['checks']}
                self.assertIn('tensor_route', checks)
                self.assertTrue(checks['tensor_route']['passed'], checks['tensor_route']['witness'])
        self.assertIsNone(tensor_route_defect(build_complex(3, -1), 2))


if __name__ == '__main__':
    unittest.main()
