"""
Partitions, compositions, tableaux, permutations and the sign statistics
attached to them
"""

from collections import namedtuple
from functools import lru_cache
from itertools import permutations

PartitionStats = namedtuple('PartitionStats', ['N', 'NE', 'NEbar', 'dN', 'dE'])


def sharp(n, r):
    """n # r = n + (n+1) + ... + (n+r-1)"""
    return n * r + r * (r - 1) // 2


def binom2(r):
    return r * (r - 1) // 2


# Partitions

def partition(parts):
    """
    Normalize a sequence to a partition tuple

    Args:
        parts: Iterable of integers, trailing zeros allowed

    Returns:
        Tuple of positive integers in weakly decreasing order

    Raises:
        ValueError: if the sequence is not a partition
    """
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p <= 0 for p in parts):
        raise ValueError(f"Partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
    return tuple(parts)


def size(lam):
    return sum(lam)


def height(lam):
    return len(lam)


def part(lam, i):
    """The i-th part (1-based), zero beyond the height"""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def transpose(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def boxes(lam):
    """Boxes (row, column) in English convention, both 1-based"""
    return [(i + 1, j + 1) for i, p in enumerate(lam) for j in range(p)]


def contains(outer, inner):
    return len(inner) <= len(outer) and all(part(outer, i) >= p for i, p in enumerate(inner, 1))


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n in decreasing lexicographic order"""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def enum_grpar(m, n):
    """
    Partitions fitting inside an m x n rectangle

    Args:
        m: Maximum height
        n: Maximum first part

    Returns:
        List of partitions ordered by size, then decreasing lex
    """
    if m < 0 or n < 0:
        raise ValueError(f"Rectangle dimensions must be nonnegative, got {m} x {n}")
    result = []
    for total in range(m * n + 1):
        for lam in partitions_of(total):
            if len(lam) <= m and (not lam or lam[0] <= n):
                result.append(lam)
    return result


def dominates(lam, mu):
    """True if lam >= mu in the dominance order (same size assumed)"""
    if size(lam) != size(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += part(lam, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


def lex_key(lam):
    return tuple(lam)


def complement(lam, m, n):
    """Complement of lam in the m x n rectangle, rotated back to a partition"""
    return partition([n - part(lam, m + 1 - i) for i in range(1, m + 1)])


# Sign statistics

def _count_pairs(lam, relation):
    cells = boxes(lam)
    return sum(1 for a in cells for b in cells if relation(a, b))


def ne_count(lam):
    """Pairs (A, B) with B strictly above and strictly right of A"""
    return _count_pairs(lam, lambda a, b: b[0] < a[0] and b[1] > a[1])


def nebar_count(lam):
    """Pairs (A, B) with B weakly above and weakly right of A, A = B included"""
    return _count_pairs(lam, lambda a, b: b[0] <= a[0] and b[1] >= a[1])


def stats(lam):
    """
    Sign statistics of a partition

    Returns:
        PartitionStats with N, NE, NEbar, dN, dE
    """
    n_stat = sum(lam[i] * lam[j] for i in range(len(lam)) for j in range(i + 1, len(lam)))
    d_n = sum(i * p for i, p in enumerate(lam))
    d_e = sum(binom2(p) for p in lam)
    ne = ne_count(lam)
    return PartitionStats(N=n_stat, NE=ne, NEbar=size(lam) + d_n + d_e + ne, dN=d_n, dE=d_e)


def composition_n(alpha):
    """N(alpha) = sum over i < j of alpha_i alpha_j"""
    alpha = list(alpha)
    return sum(alpha[i] * alpha[j] for i in range(len(alpha)) for j in range(i + 1, len(alpha)))


# Tableaux

class Tableau:
    """
    A filling of a Young diagram by integers

    Rows are stored top to bottom, entries left to right.
    """

    def __init__(self, rows):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.shape = partition(len(row) for row in self.rows)

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]

    def is_semistandard(self):
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                return False
        return True

    def content(self):
        counts = {}
        for row in self.rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        top = max(counts) if counts else 0
        return tuple(counts.get(x, 0) for x in range(1, top + 1))

    def n_statistic(self):
        """Pairs (A, B), B strictly north of A, with T(B) >= T(A)"""
        cells = boxes(self.shape)
        return sum(1 for a in cells for b in cells
                   if b[0] < a[0] and self.entry(*b) >= self.entry(*a))

    def to_json(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


def tableau_sign(tableau):
    """
    (-1)^{N(T)} for a semistandard tableau

    Raises:
        ValueError: if the tableau is not semistandard
    """
    if not isinstance(tableau, Tableau):
        tableau = Tableau(tableau)
    if not tableau.is_semistandard():
        raise ValueError(f"Tableau {tableau.to_json()} is not semistandard")
    return -1 if tableau.n_statistic() % 2 else 1


def _remove_horizontal_strips(shape, count):
    """Inner shapes nu with shape / nu a horizontal strip of the given size"""
    rows = list(shape)
    results = []

    def extend(i, remaining, inner):
        if i == len(rows):
            if remaining == 0:
                results.append(partition(inner))
            return
        lower_bound = part(shape, i + 2)
        for take in range(0, min(remaining, rows[i] - lower_bound) + 1):
            extend(i + 1, remaining - take, inner + [rows[i] - take])

    extend(0, count, [])
    return results


def ssyt(shape, content):
    """
    Semistandard tableaux of a given shape and content

    Entries equal to k form a horizontal strip, so the tableaux are built by
    peeling strips from the outside in.

    Args:
        shape: Partition
        content: Composition (number of 1s, 2s, ...)

    Returns:
        List of Tableau objects
    """
    shape = partition(shape)
    content = list(content)
    if sum(content) != size(shape):
        return []

    def fill(current, k):
        if k == 0:
            return [[]] if not current else []
        tableaux = []
        for inner in _remove_horizontal_strips(current, content[k - 1]):
            for rows in fill(inner, k - 1):
                padded = [list(rows[i]) if i < len(rows) else [] for i in range(len(current))]
                for i in range(len(current)):
                    padded[i].extend([k] * (current[i] - part(inner, i + 1)))
                tableaux.append(padded)
        return tableaux

    return [Tableau(rows) for rows in fill(shape, len(content))]


def horizontal_strip_columns(lam, mu):
    """
    Columns (1-based) of the boxes of mu / lam, or None unless it is a
    horizontal strip with lam inside mu
    """
    if not contains(mu, lam):
        return None
    lam_t, mu_t = transpose(lam), transpose(mu)
    columns = []
    for j in range(1, len(mu_t) + 1):
        diff = part(mu_t, j) - part(lam_t, j)
        if diff > 1:
            return None
        if diff == 1:
            columns.append(j)
    return columns


def add_horizontal_strips(lam, r):
    """All mu obtained from lam by adding one box to r different columns"""
    lam = partition(lam)
    return _grow_rows(lam, r, (lam[0] if lam else 0) + r)


def _grow_rows(lam, r, width):
    rows = list(lam) + [0]
    results = []

    def extend(i, remaining, outer):
        if i == len(rows):
            if remaining == 0:
                results.append(partition(outer))
            return
        upper = width if i == 0 else rows[i - 1]
        for add in range(0, min(remaining, upper - rows[i]) + 1):
            extend(i + 1, remaining - add, outer + [rows[i] + add])

    extend(0, r, [])
    return results


def pieri_sign(lam, mu, r):
    """
    Sign of s_mu in s_lam h_r

    Returns:
        +1 or -1, or None unless mu is lam plus a horizontal strip of size r
    """
    lam, mu = partition(lam), partition(mu)
    if size(mu) - size(lam) != r:
        return None
    columns = horizontal_strip_columns(lam, mu)
    if columns is None or len(columns) != r:
        return None
    lam_t = transpose(lam)
    first = lam[0] if lam else 0
    s_stat = sum(part(lam_t, k) for i in columns for k in range(i + 1, first + 1))
    exponent = ne_count(lam) + ne_count(mu) + s_stat
    return -1 if exponent % 2 else 1


# Permutations (one-line notation, values 1..n, acting on the left)

PermInfo = namedtuple('PermInfo', ['length', 'word', 'coset_reps'])


def identity(n):
    return tuple(range(1, n + 1))


def simple(j, n):
    """The basic transposition s_j = (j j+1) in S_n"""
    if not 1 <= j < n:
        raise ValueError(f"s_{j} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[j - 1], w[j] = w[j], w[j - 1]
    return tuple(w)


def compose(u, v):
    """(uv)(i) = u(v(i))"""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse(w):
    result = [0] * len(w)
    for i, wi in enumerate(w, 1):
        result[wi - 1] = i
    return tuple(result)


def perm_length(w):
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_from_word(word, n):
    w = identity(n)
    for j in word:
        w = compose(w, simple(j, n))
    return w


def longest(n):
    return tuple(range(n, 0, -1))


def omega_word(n):
    """The fixed reduced word (n-1 ... 1)(n-1 ... 2)...(n-1) of the longest element"""
    word = []
    for start in range(1, n):
        word.extend(range(n - 1, start - 1, -1))
    return word


@lru_cache(maxsize=None)
def reduced_word(w):
    """
    Lexicographically smallest reduced word of w

    The first letter is the smallest left descent j, i.e. the smallest j with
    w^{-1}(j) > w^{-1}(j+1).
    """
    w = tuple(w)
    n = len(w)
    if perm_length(w) == 0:
        return ()
    w_inv = inverse(w)
    for j in range(1, n):
        if w_inv[j - 1] > w_inv[j]:
            return (j,) + reduced_word(compose(simple(j, n), w))
    raise AssertionError("A nonidentity permutation has a left descent")


def all_permutations(n):
    return [tuple(p) for p in permutations(range(1, n + 1))]


def min_coset_reps(alpha):
    """
    Minimal length representatives of S_n / S_alpha

    These are the permutations increasing on each block of alpha.
    """
    alpha = [int(a) for a in alpha]
    n = sum(alpha)
    blocks = []
    start = 0
    for a in alpha:
        blocks.append(range(start, start + a))
        start += a
    reps = []
    for w in all_permutations(n):
        if all(w[i] < w[i + 1] for block in blocks for i in list(block)[:-1]):
            reps.append(w)
    return reps


def perm_tools(w, alpha=None):
    """
    Length, canonical reduced word and, optionally, coset representatives

    Args:
        w: Permutation in one-line notation
        alpha: Optional composition of len(w)

    Returns:
        PermInfo record
    """
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation")
    reps = None
    if alpha is not None:
        if sum(alpha) != len(w):
            raise ValueError(f"Composition {list(alpha)} does not have size {len(w)}")
        reps = [(r, perm_length(r)) for r in min_coset_reps(alpha)]
    return PermInfo(length=perm_length(w), word=list(reduced_word(w)), coset_reps=reps)
