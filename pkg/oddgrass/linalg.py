"""
Exact linear algebra over the rationals for sparse integer vectors

Vectors are dictionaries {label: integer}. Matrices are assembled as sympy
DomainMatrix objects over QQ, so ranks, echelon forms and solutions are exact.
"""

import logging

from sympy import Integer
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import InternalError

logger = logging.getLogger(__name__)


def _domain_matrix(rows, ncols):
    return DomainMatrix([[QQ(int(x)) for x in row] for row in rows], (len(rows), ncols), QQ)


def _as_int(value):
    numerator, denominator = int(value.p), int(value.q)
    if denominator != 1:
        raise InternalError(f"Expected an integral solution, got {numerator}/{denominator}")
    return numerator


def labels_of(vectors):
    """Sorted union of the supports of several sparse vectors"""
    support = set()
    for vec in vectors:
        support.update(vec)
    return sorted(support)


def matrix_rank(rows, ncols=None):
    """
    Rank of an integer matrix given as a list of rows

    Args:
        rows: List of equal-length integer lists
        ncols: Column count, required when rows is empty

    Returns:
        Integer rank
    """
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return _domain_matrix(rows, ncols).rank()


def vectors_rank(vectors):
    """Rank of the span of sparse vectors"""
    vectors = [v for v in vectors if any(v.values())]
    if not vectors:
        return 0
    labels = labels_of(vectors)
    rows = [[v.get(label, 0) for label in labels] for v in vectors]
    return matrix_rank(rows, len(labels))


def solve_combination(columns, target, integral=True):
    """
    Find coefficients with sum_i coeffs[i] * columns[i] = target

    Free variables are set to zero.

    Args:
        columns: List of sparse vectors
        target: Sparse vector
        integral: Insist that the solution is integral

    Returns:
        List of coefficients (ints, or sympy Rationals when integral is False),
        or None if target is not in the span of the columns
    """
    labels = labels_of(list(columns) + [target])
    ncols = len(columns)
    if not labels:
        return [0] * ncols
    rows = [[col.get(label, 0) for col in columns] + [target.get(label, 0)] for label in labels]
    reduced, pivots = _domain_matrix(rows, ncols + 1).rref()
    if ncols in pivots:
        return None
    entries = reduced.to_Matrix()
    solution = [Integer(0)] * ncols
    for i, j in enumerate(pivots):
        solution[j] = entries[i, ncols]
    logger.debug("Solved %d x %d system", len(labels), ncols)
    if integral:
        return [_as_int(x) for x in solution]
    return solution


def express(basis, target):
    """
    Coordinates of target in a linearly independent family

    Raises:
        InternalError: if target is not in the span
    """
    coeffs = solve_combination(basis, target)
    if coeffs is None:
        raise InternalError(f"Vector {target} is not in the span of the given basis")
    return coeffs


def nullity(rows, ncols):
    """Dimension of the kernel of the matrix acting on column vectors"""
    return ncols - matrix_rank(rows, ncols)


def columns_matrix(columns, labels):
    """Dense matrix whose j-th column is the sparse vector columns[j]"""
    return [[col.get(label, 0) for col in columns] for label in labels]


def sign_equivalence_defect(first, second):
    """
    Check that two sparse matrices agree up to signs on rows and columns

    Matrices are dictionaries {(row, col): integer}. They are sign equivalent
    when first[row, col] = s_row t_col second[row, col] for some choice of
    signs s, t, i.e. when they differ by a change of basis sending each basis
    vector to plus or minus itself.

    Returns:
        None, or the (row, col) entry where no consistent choice exists
    """
    edges = {}
    for key in set(first) | set(second):
        a, b = first.get(key, 0), second.get(key, 0)
        if a == b == 0:
            continue
        if abs(a) != abs(b):
            return key
        edges[key] = 1 if a == b else -1

    adjacency = {}
    for (row, col), s in edges.items():
        adjacency.setdefault(('row', row), []).append((('col', col), s, (row, col)))
        adjacency.setdefault(('col', col), []).append((('row', row), s, (row, col)))

    signs = {}
    for start in sorted(adjacency, key=repr):
        if start in signs:
            continue
        signs[start] = 1
        stack = [start]
        while stack:
            node = stack.pop()
            for other, s, key in adjacency[node]:
                expected = signs[node] * s
                if other not in signs:
                    signs[other] = expected
                    stack.append(other)
                elif signs[other] != expected:
                    return key
    return None
