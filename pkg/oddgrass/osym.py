"""
The ring OSym of odd symmetric functions

Elements are stored in the complete basis {h_lambda}. The elementary, Schur
and dual Schur functions, the symmetries psi, gamma and *, the coproducts,
the bilinear forms and the truncations OSym_n are all computed from the
straightening rule for products h_r h_s.
"""

import logging
import random
from functools import lru_cache

from .combinatorics import (binom2, dominates, partition, partitions_of, size, ssyt,
                            tableau_sign)
from .linalg import vectors_rank
from .qpi_scalars import GPScalar, pi_q2

logger = logging.getLogger(__name__)

BASES = ('h', 'e', 's')


def _sign(exponent):
    return -1 if exponent % 2 else 1


class OSymElem:
    """
    Element of OSym in the h-basis

    Coefficients are integers keyed by partitions; h_lambda has degree
    2|lambda| and parity |lambda| mod 2.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for lam, c in coeffs.items():
                self._accumulate(partition(lam), int(c))

    def _accumulate(self, lam, c):
        if not c:
            return
        total = self.coeffs.get(lam, 0) + c
        if total:
            self.coeffs[lam] = total
        else:
            self.coeffs.pop(lam, None)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, OSymElem):
            return value
        if isinstance(value, int):
            return cls({(): value})
        raise TypeError(f"Cannot interpret {value!r} as an OSymElem")

    def __add__(self, other):
        other = OSymElem.coerce(other)
        result = OSymElem()
        result.coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            result._accumulate(lam, c)
        return result

    __radd__ = __add__

    def __neg__(self):
        result = OSymElem()
        result.coeffs = {lam: -c for lam, c in self.coeffs.items()}
        return result

    def __sub__(self, other):
        return self + (-OSymElem.coerce(other))

    def __rsub__(self, other):
        return OSymElem.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return mul(OSymElem.coerce(other), self)

    def scale(self, c):
        result = OSymElem()
        if c:
            result.coeffs = {lam: c * v for lam, v in self.coeffs.items()}
        return result

    def __eq__(self, other):
        try:
            other = OSymElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda item: (size(item[0]), item[0]))

    def degree(self):
        """Largest degree 2|lambda| in the support, -1 for zero"""
        return max((2 * size(lam) for lam in self.coeffs), default=-1)

    def parity(self):
        """
        Parity of a homogeneous element

        Raises:
            ValueError: if the element mixes parities
        """
        parities = {size(lam) % 2 for lam in self.coeffs}
        if len(parities) > 1:
            raise ValueError(f"{self} is not homogeneous for the parity grading")
        return parities.pop() if parities else 0

    def component(self, half_degree):
        """The homogeneous component of degree 2 * half_degree"""
        return OSymElem({lam: c for lam, c in self.coeffs.items() if size(lam) == half_degree})

    def components(self):
        """Mapping half-degree -> homogeneous component"""
        result = {}
        for lam, c in self.coeffs.items():
            result.setdefault(size(lam), OSymElem())._accumulate(lam, c)
        return result

    def to_json(self, basis='h'):
        """
        JSON form in the requested basis

        Args:
            basis: 'h', 'e' or 's'
        """
        if basis == 'h':
            coeffs = self.coeffs
        elif basis == 'e':
            coeffs = e_basis(self)
        elif basis == 's':
            coeffs = to_schur(self)
        else:
            raise ValueError(f"Unknown basis {basis!r}, expected one of {BASES}")
        return {'basis': basis,
                'terms': [[list(lam), c] for lam, c in sorted(coeffs.items(),
                                                              key=lambda kv: (size(kv[0]), kv[0]))]}

    @classmethod
    def from_json(cls, data):
        try:
            basis = data['basis']
            coeffs = {partition(lam): c for lam, c in data['terms']}
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid OSym JSON: {data!r}") from e
        if basis == 'h':
            return cls(coeffs)
        if basis == 'e':
            return from_e_basis(coeffs)
        if basis == 's':
            return from_schur(coeffs)
        raise ValueError(f"Unknown basis {basis!r}, expected one of {BASES}")

    def __str__(self):
        return format_terms(self.coeffs, 'h')

    def __repr__(self):
        return f"OSymElem({self})"


def format_terms(coeffs, letter):
    """Human readable form of a partition-indexed combination"""
    if not coeffs:
        return '0'
    pieces = []
    for lam, c in sorted(coeffs.items(), key=lambda kv: (size(kv[0]), kv[0])):
        label = letter + '_(' + ','.join(str(p) for p in lam) + ')' if lam else '1'
        if c == 1:
            pieces.append(label)
        elif c == -1:
            pieces.append('-' + label)
        elif lam:
            pieces.append(f'{c}*{label}')
        else:
            pieces.append(str(c))
    return ' + '.join(pieces).replace('+ -', '- ')


# Straightening

@lru_cache(maxsize=None)
def _straighten(word):
    for i in range(len(word) - 1):
        r, s = word[i], word[i + 1]
        if r >= s:
            continue
        prefix, suffix = word[:i], word[i + 2:]
        pieces = []
        if r % 2 == s % 2:
            pieces.append(((s, r), 1))
        elif r % 2 == 0:
            pieces.append(((s, r), 1))
            for t in range(1, r + 1):
                pieces.append(((s + t, r - t), 2 * _sign(binom2(t))))
        else:
            pieces.append(((s, r), -1))
            for t in range(1, r + 1):
                pieces.append(((s + t, r - t), -2 * _sign(binom2(t + 1))))
        total = {}
        for pair, c in pieces:
            new_word = tuple(x for x in prefix + pair + suffix if x)
            for lam, v in _straighten(new_word):
                total[lam] = total.get(lam, 0) + c * v
        return tuple((lam, v) for lam, v in total.items() if v)
    return ((word, 1),)


def straighten(word, coeff=1):
    """
    Write the product h_{w_1} ... h_{w_k} in the h_lambda basis

    Args:
        word: Sequence of nonnegative integers; zeros stand for h_0 = 1
        coeff: Integer multiplier

    Returns:
        OSymElem
    """
    word = tuple(int(x) for x in word)
    if any(x < 0 for x in word):
        raise ValueError(f"h-word has a negative index: {list(word)}")
    word = tuple(x for x in word if x)
    result = OSymElem()
    if coeff:
        result.coeffs = {lam: coeff * v for lam, v in _straighten(word)}
    return result


def mul(a, b):
    """Product in OSym"""
    a, b = OSymElem.coerce(a), OSymElem.coerce(b)
    result = OSymElem()
    for lam, c in a.coeffs.items():
        for mu, d in b.coeffs.items():
            for nu, v in _straighten(lam + mu):
                result._accumulate(nu, c * d * v)
    return result


def product(factors):
    result = OSymElem.one()
    for f in factors:
        result = mul(result, f)
    return result


def power(x, k):
    return product([x] * k)


# Generators

def h(r):
    """The complete function h_r (zero for r < 0)"""
    if r < 0:
        return OSymElem()
    return OSymElem({(r,) if r else (): 1})


@lru_cache(maxsize=None)
def _e_elem(r):
    if r == 0:
        return OSymElem.one()
    total = OSymElem()
    for s in range(r):
        total = total + mul(_e_elem(s), h(r - s)).scale(_sign(s))
    return total.scale(_sign(r + 1))


def e_elem(r):
    """
    The elementary function e_r

    Solved from sum_{s=0}^r (-1)^s e_s h_{r-s} = delta_{r,0}.
    """
    if r < 0:
        return OSymElem()
    return OSymElem(_e_elem(r).coeffs)


def o():
    """o = e_1 = h_1"""
    return e_elem(1)


def eps(r):
    """epsilon_r = (-1)^{binom(r,2)} e_r"""
    return e_elem(r).scale(_sign(binom2(r))) if r >= 0 else OSymElem()


def eta(r):
    """eta_r = gamma(h_r)"""
    return gamma(h(r))


def h_basis(lam):
    return OSymElem({partition(lam): 1})


@lru_cache(maxsize=None)
def _e_word(lam):
    return product(_e_elem(r) for r in lam)


def e_basis_element(lam):
    """e_lambda = e_{lambda_1} e_{lambda_2} ..."""
    return OSymElem(_e_word(partition(lam)).coeffs)


def z_elem(r):
    """The central element z_{2r} = sum_{s=0}^r e_{2s} h_{2r-2s}"""
    total = OSymElem()
    for s in range(r + 1):
        total = total + mul(e_elem(2 * s), h(2 * r - 2 * s))
    return total


# Symmetries

def psi(x):
    """The algebra involution h_r -> (-1)^r e_r"""
    x = OSymElem.coerce(x)
    result = OSymElem()
    for lam, c in x.coeffs.items():
        for mu, v in _e_word(lam).coeffs.items():
            result._accumulate(mu, _sign(size(lam)) * c * v)
    return result


def e_basis(x):
    """
    Coordinates in the basis {e_lambda}

    The e-coefficient of lambda is (-1)^{|lambda|} times the h-coefficient
    of psi(x).
    """
    return {lam: _sign(size(lam)) * c for lam, c in psi(x).coeffs.items()}


def from_e_basis(coeffs):
    result = OSymElem()
    for lam, c in coeffs.items():
        result = result + _e_word(partition(lam)).scale(c)
    return result


def gamma(x):
    """The algebra involution e_r -> (-1)^{binom(r,2)} e_r"""
    coeffs = e_basis(x)
    return from_e_basis({lam: _sign(sum(binom2(p) for p in lam)) * c
                         for lam, c in coeffs.items()})


def star(x):
    """
    The superalgebra anti-involution fixing every e_r

    (e_{l_1} ... e_{l_k})* = (-1)^{sum_{i<j} l_i l_j} e_{l_k} ... e_{l_1}
    """
    result = OSymElem()
    for lam, c in e_basis(x).items():
        koszul = sum(lam[i] * lam[j] for i in range(len(lam)) for j in range(i + 1, len(lam)))
        result = result + product(_e_elem(r) for r in reversed(lam)).scale(_sign(koszul) * c)
    return result


def symmetry(x, which):
    """
    Apply one of the symmetries of OSym

    Args:
        x: OSymElem
        which: 'psi', 'gamma' or 'star'
    """
    maps = {'psi': psi, 'gamma': gamma, 'star': star}
    if which not in maps:
        raise ValueError(f"Unknown symmetry {which!r}, expected one of {sorted(maps)}")
    return maps[which](x)


# Coproducts

class OSymTensor:
    """
    Element of OSym (x) OSym in the h (x) h basis

    Multiplication follows the super rule
    (a (x) b)(a' (x) b') = (-1)^{par(b) par(a')} aa' (x) bb'.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for (lam, mu), c in coeffs.items():
                self._accumulate(partition(lam), partition(mu), int(c))

    def _accumulate(self, lam, mu, c):
        if not c:
            return
        key = (lam, mu)
        total = self.coeffs.get(key, 0) + c
        if total:
            self.coeffs[key] = total
        else:
            self.coeffs.pop(key, None)

    @classmethod
    def pure(cls, a, b):
        """a (x) b for two OSym elements"""
        result = cls()
        for lam, c in OSymElem.coerce(a).coeffs.items():
            for mu, d in OSymElem.coerce(b).coeffs.items():
                result._accumulate(lam, mu, c * d)
        return result

    def __add__(self, other):
        result = OSymTensor(self.coeffs)
        for (lam, mu), c in other.coeffs.items():
            result._accumulate(lam, mu, c)
        return result

    def __mul__(self, other):
        result = OSymTensor()
        for (lam, mu), c in self.coeffs.items():
            for (lam2, mu2), d in other.coeffs.items():
                sign = _sign(size(mu) * size(lam2))
                for left, v in _straighten(lam + lam2):
                    for right, w in _straighten(mu + mu2):
                        result._accumulate(left, right, sign * c * d * v * w)
        return result

    def swap(self):
        """The super swap a (x) b -> (-1)^{par a par b} b (x) a"""
        result = OSymTensor()
        for (lam, mu), c in self.coeffs.items():
            result._accumulate(mu, lam, _sign(size(lam) * size(mu)) * c)
        return result

    def __eq__(self, other):
        if not isinstance(other, OSymTensor):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return '0'
        pieces = [f"{c}*h{list(lam)}(x)h{list(mu)}" for (lam, mu), c in sorted(self.coeffs.items())]
        return ' + '.join(pieces)

    def __repr__(self):
        return f"OSymTensor({self})"


@lru_cache(maxsize=None)
def _coproduct_h(lam):
    result = OSymTensor({((), ()): 1})
    for r in lam:
        factor = OSymTensor({((s,) if s else (), (r - s,) if r - s else ()): 1
                             for s in range(r + 1)})
        result = result * factor
    return result


def coproduct(x, side='minus'):
    """
    The coproducts Delta^- and Delta^+

    Delta^-(h_r) = sum_s h_s (x) h_{r-s}, extended as a superalgebra map;
    Delta^+ is Delta^- followed by the super swap.

    Args:
        x: OSymElem
        side: 'minus' or 'plus'

    Returns:
        OSymTensor
    """
    if side not in ('minus', 'plus'):
        raise ValueError(f"Coproduct side must be 'minus' or 'plus', got {side!r}")
    result = OSymTensor()
    for lam, c in OSymElem.coerce(x).coeffs.items():
        for (a, b), v in _coproduct_h(lam).coeffs.items():
            result._accumulate(a, b, c * v)
    return result.swap() if side == 'plus' else result


# Bilinear forms

@lru_cache(maxsize=None)
def _pair_h(lam, mu):
    if size(lam) != size(mu):
        return 0
    if not lam:
        return 1
    first, rest = lam[0], lam[1:]
    total = 0
    for (a, b), c in _coproduct_h(mu).coeffs.items():
        if size(a) == first:
            total += c * _pair_h(rest, b)
    return total


def pair(x, y, side='minus'):
    """
    The bilinear forms (x, y)^- and (x, y)^+

    (h_r, h_s)^- = delta_{rs} and (ab, c)^- = (a (x) b, Delta^-(c))^-;
    the plus form is (x, y)^+ = (psi x, psi y)^-.
    """
    if side not in ('minus', 'plus'):
        raise ValueError(f"Form side must be 'minus' or 'plus', got {side!r}")
    x, y = OSymElem.coerce(x), OSymElem.coerce(y)
    if side == 'plus':
        x, y = psi(x), psi(y)
    total = 0
    for lam, c in x.coeffs.items():
        for mu, d in y.coeffs.items():
            total += c * d * _pair_h(lam, mu)
    return total


# Schur functions

def kostka(lam, mu):
    """
    The odd Kostka number: sum over semistandard lam-tableaux T of content mu
    of (-1)^{N(T)}
    """
    return _kostka(partition(lam), partition(mu))


@lru_cache(maxsize=None)
def _kostka(lam, mu):
    if size(lam) != size(mu) or not dominates(lam, mu):
        return 0
    return sum(tableau_sign(t) for t in ssyt(lam, mu))


def kostka_matrix(degree):
    """
    Kostka matrix of a given size, rows and columns in decreasing lex order

    Returns:
        (partitions, matrix) with matrix[i][j] = K_{partitions[i], partitions[j]}
    """
    if degree < 0:
        raise ValueError(f"Degree must be nonnegative, got {degree}")
    parts = list(partitions_of(degree))
    return parts, [[kostka(lam, mu) for mu in parts] for lam in parts]


def to_schur(x):
    """Coordinates in the Schur basis, using h_mu = sum_lam K_{lam,mu} s_lam"""
    result = {}
    for mu, c in OSymElem.coerce(x).coeffs.items():
        for lam in partitions_of(size(mu)):
            k = _kostka(lam, mu)
            if k:
                result[lam] = result.get(lam, 0) + c * k
    return {lam: c for lam, c in result.items() if c}


@lru_cache(maxsize=None)
def _schur(lam):
    result = OSymElem({lam: 1})
    for nu in partitions_of(size(lam)):
        if nu == lam:
            break
        k = _kostka(nu, lam)
        if k:
            result = result - _schur(nu).scale(k)
    return result


def schur(lam):
    """The odd Schur function s_lam in the h-basis"""
    return OSymElem(_schur(partition(lam)).coeffs)


def from_schur(coeffs):
    result = OSymElem()
    for lam, c in coeffs.items():
        result = result + _schur(partition(lam)).scale(c)
    return result


def sigma(lam):
    """The dual Schur function sigma_lam = gamma(s_lam)"""
    return gamma(schur(lam))


def lr(lam, mu):
    """Odd Littlewood-Richardson coefficients of s_lam s_mu in the Schur basis"""
    return to_schur(mul(schur(lam), schur(mu)))


# Truncations

def truncate(x, n):
    """
    Image of x in OSym_n, represented by its e-expansion with parts at most n

    Returns:
        OSymElem whose e-expansion only involves e_r with r <= n
    """
    if n < 0:
        raise ValueError(f"Truncation index must be nonnegative, got {n}")
    coeffs = {lam: c for lam, c in e_basis(x).items() if not lam or lam[0] <= n}
    return from_e_basis(coeffs)


def truncated_schur(x, n):
    """Schur coordinates of the image of x in OSym_n, where s_lam = 0 for ht(lam) > n"""
    return {lam: c for lam, c in to_schur(truncate(x, n)).items() if len(lam) <= n}


def osym_n_basis(n, half_degree):
    """Partitions indexing a basis of OSym_n in degree 2 * half_degree"""
    return list(partitions_of(half_degree, n))


def graded_dimension(n, max_half_degree):
    """
    Graded dimension of OSym_n truncated at degree 2 * max_half_degree

    Degree 2d counts the rank of the images pi_n(h_lam), |lam| = d, inside OPol_n.
    """
    from .onh import osym_to_opol  # onh imports this module

    total = GPScalar()
    for d in range(max_half_degree + 1):
        rank = vectors_rank([osym_to_opol(OSymElem({lam: 1}), n).coeffs for lam in partitions_of(d)])
        if rank:
            total = total + pi_q2(d).scale(c=rank)
    return total


def random_element(half_degree, rng=None, max_coeff=3, homogeneous=True):
    """
    A random element, used by the verification suites

    Args:
        half_degree: Degree bound (the element lives in degrees <= 2 * half_degree)
        rng: random.Random instance
        max_coeff: Bound on coefficients
        homogeneous: Restrict to the top degree
    """
    rng = rng or random.Random(0)
    degrees = [half_degree] if homogeneous else range(half_degree + 1)
    coeffs = {}
    for d in degrees:
        for lam in partitions_of(d):
            c = rng.randint(-max_coeff, max_coeff)
            if c:
                coeffs[lam] = c
    return OSymElem(coeffs)
