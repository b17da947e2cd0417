"""
Unit tests for partitions, tableaux, permutations and exact linear algebra
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.combinatorics import (Tableau, add_horizontal_strips, all_permutations, complement,
                                    composition_n, compose, dominates, enum_grpar, inverse,
                                    longest, min_coset_reps, omega_word, partition, partitions_of,
                                    perm_from_word, perm_length, perm_tools, pieri_sign,
                                    reduced_word, sharp, ssyt, stats, tableau_sign, transpose)
from oddgrass.errors import InternalError
from oddgrass.linalg import (express, matrix_rank, nullity, sign_equivalence_defect, solve_combination,
                             vectors_rank)


class TestPartitions(unittest.TestCase):
    """Test cases for partitions and their statistics"""

    def test_normalization(self):
        """Trailing zeros are dropped, bad sequences rejected"""
        self.assertEqual(partition([2, 1, 0, 0]), (2, 1))
        self.assertEqual(partition([]), ())
        for bad in ([1, 2], [2, -1], [0, 1]):
            with self.subTest(parts=bad):
                with self.assertRaises(ValueError):
                    partition(bad)

    def test_sharp(self):
        """n # r is a sum of r consecutive integers"""
        self.assertEqual(sharp(2, 3), 9)
        self.assertEqual(sharp(5, 0), 0)
        self.assertEqual(sharp(-1, 2), -1)

    def test_partitions_of(self):
        """Partitions in decreasing lexicographic order"""
        self.assertEqual(partitions_of(3), ((3,), (2, 1), (1, 1, 1)))
        self.assertEqual(partitions_of(0), ((),))
        self.assertEqual(len(partitions_of(5)), 7)

    def test_transpose(self):
        self.assertEqual(transpose((3, 1)), (2, 1, 1))
        self.assertEqual(transpose(()), ())
        self.assertEqual(transpose(transpose((4, 2, 2))), (4, 2, 2))

    def test_rectangle_enumeration(self):
        """Partitions in a box, by size"""
        self.assertEqual(enum_grpar(1, 2), [(), (1,), (2,)])
        box = enum_grpar(2, 2)
        self.assertEqual(len(box), 6)
        self.assertEqual(box[0], ())
        self.assertEqual(box[-1], (2, 2))
        self.assertEqual(enum_grpar(0, 3), [()])
        with self.assertRaises(ValueError):
            enum_grpar(-1, 2)

    def test_complement(self):
        self.assertEqual(complement((1,), 2, 2), (2, 1))
        self.assertEqual(complement((), 2, 3), (3, 3))
        self.assertEqual(complement((3, 3), 2, 3), ())

    def test_dominance(self):
        self.assertTrue(dominates((3,), (2, 1)))
        self.assertTrue(dominates((2, 1), (1, 1, 1)))
        self.assertFalse(dominates((1, 1, 1), (2, 1)))
        self.assertFalse(dominates((2,), (2, 1)))

    def test_sign_statistics(self):
        """N, NE, NEbar, dN and dE of (2,1)"""
        s = stats((2, 1))
        self.assertEqual(s.N, 2)
        self.assertEqual(s.NE, 1)
        self.assertEqual(s.NEbar, 6)
        self.assertEqual(s.dN, 1)
        self.assertEqual(s.dE, 1)
        self.assertEqual(stats(()).NEbar, 0)

    def test_composition_n(self):
        self.assertEqual(composition_n([1, 2]), 2)
        self.assertEqual(composition_n([1, 1, 1]), 3)


class TestTableaux(unittest.TestCase):
    """Test cases for semistandard tableaux and Pieri signs"""

    def test_enumeration(self):
        """Kostka numbers as tableau counts"""
        standard = ssyt((2, 1), (1, 1, 1))
        self.assertEqual(set(standard), {Tableau([[1, 2], [3]]), Tableau([[1, 3], [2]])})
        self.assertEqual(ssyt((2, 1), (2, 1)), [Tableau([[1, 1], [2]])])
        self.assertEqual(ssyt((1, 1, 1), (2, 1)), [])
        self.assertEqual(ssyt((2,), (1,)), [])

    def test_semistandard(self):
        self.assertTrue(Tableau([[1, 1], [2]]).is_semistandard())
        self.assertFalse(Tableau([[1, 1], [1]]).is_semistandard())
        self.assertFalse(Tableau([[2, 1]]).is_semistandard())
        self.assertEqual(Tableau([[1, 1], [2]]).content(), (2, 1))

    def test_tableau_sign(self):
        """(-1)^N(T) counts north pairs with a weakly larger entry"""
        self.assertEqual(tableau_sign([[1, 2], [3]]), 1)
        self.assertEqual(tableau_sign([[1, 3], [2]]), -1)
        with self.assertRaises(ValueError):
            tableau_sign([[2, 1]])

    def test_pieri_sign(self):
        """Signs of single box additions and rejections"""
        self.assertEqual(pieri_sign((1,), (2,), 1), 1)
        self.assertEqual(pieri_sign((1,), (1, 1), 1), 1)
        self.assertIsNone(pieri_sign((1,), (3,), 1))
        self.assertIsNone(pieri_sign((1,), (1, 1, 1), 2))

    def test_horizontal_strips(self):
        self.assertEqual(set(add_horizontal_strips((1,), 1)), {(2,), (1, 1)})
        self.assertEqual(set(add_horizontal_strips((), 2)), {(2,)})


class TestPermutations(unittest.TestCase):
    """Test cases for permutations and reduced words"""

    def test_basic_operations(self):
        self.assertEqual(perm_length((3, 2, 1)), 3)
        self.assertEqual(inverse((2, 3, 1)), (3, 1, 2))
        self.assertEqual(compose((2, 3, 1), inverse((2, 3, 1))), (1, 2, 3))
        self.assertEqual(longest(3), (3, 2, 1))

    def test_longest_word(self):
        """The fixed reduced word of the longest element"""
        self.assertEqual(omega_word(3), [2, 1, 2])
        self.assertEqual(perm_from_word(omega_word(3), 3), longest(3))
        self.assertEqual(len(omega_word(4)), 6)

    def test_reduced_words(self):
        """Canonical reduced words multiply back to the permutation"""
        self.assertEqual(reduced_word((2, 1, 3)), (1,))
        for w in all_permutations(3):
            with self.subTest(w=w):
                word = reduced_word(w)
                self.assertEqual(len(word), perm_length(w))
                self.assertEqual(perm_from_word(word, 3), w)

    def test_coset_representatives(self):
        self.assertEqual(len(min_coset_reps([1, 1])), 2)
        self.assertEqual(len(min_coset_reps([2, 1])), 3)
        self.assertEqual(len(min_coset_reps([3])), 1)

    def test_perm_tools(self):
        info = perm_tools((2, 1, 3), alpha=[2, 1])
        self.assertEqual(info.length, 1)
        self.assertEqual(info.word, [1])
        self.assertEqual(len(info.coset_reps), 3)
        with self.assertRaises(ValueError):
            perm_tools((1, 1))
        with self.assertRaises(ValueError):
            perm_tools((1, 2), alpha=[3])


class TestLinearAlgebra(unittest.TestCase):
    """Test cases for the exact rational linear algebra"""

    def test_rank(self):
        self.assertEqual(matrix_rank([[1, 2], [2, 4]]), 1)
        self.assertEqual(matrix_rank([[1, 0], [0, 1]]), 2)
        self.assertEqual(matrix_rank([]), 0)
        self.assertEqual(nullity([[1, 1, 1]], 3), 2)

    def test_vectors_rank(self):
        vectors = [{'a': 1, 'b': 1}, {'a': 2, 'b': 2}, {'c': 1}, {'a': 0}]
        self.assertEqual(vectors_rank(vectors), 2)

    def test_solve(self):
        """Coordinates in a spanning family, None outside the span"""
        columns = [{'a': 1}, {'a': 1, 'b': 1}]
        self.assertEqual(solve_combination(columns, {'a': 3, 'b': 2}), [1, 2])
        self.assertIsNone(solve_combination(columns, {'c': 1}))
        self.assertEqual(express(columns, {'b': 1}), [-1, 1])
        with self.assertRaises(InternalError):
            express(columns, {'c': 1})

    def test_non_integral_solution(self):
        columns = [{'a': 2}]
        with self.assertRaises(InternalError):
            solve_combination(columns, {'a': 1})
        self.assertEqual(solve_combination(columns, {'a': 1}, integral=False)[0] * 2, 1)

    def test_sign_equivalence(self):
        """Matrices agreeing up to basis signs pass, others return an entry"""
        first = {(0, 0): 1, (0, 1): 2, (1, 1): -1}
        self.assertIsNone(sign_equivalence_defect(first, {(0, 0): -1, (0, 1): -2, (1, 1): -1}))
        self.assertIsNone(sign_equivalence_defect({}, {(0, 0): 0}))
        self.assertEqual(sign_equivalence_defect(first, {(0, 0): 1, (0, 1): 3, (1, 1): -1}), (0, 1))
        square = {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}
        twisted = dict(square)
        twisted[(1, 1)] = -1
        self.assertIsNotNone(sign_equivalence_defect(square, twisted))


if __name__ == '__main__':
    unittest.main()
