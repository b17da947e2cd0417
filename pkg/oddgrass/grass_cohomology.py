"""
Equivariant odd Grassmannian cohomology

The base ring R_ell, the largest supercommutative quotient of OSym_ell, is
modelled as Sym_m[c]: polynomials in even generators g_1, ..., g_m of degree
4r together with an odd square-zero element c of degree 2. When ell is even
the extra relation c * g_{ell/2} = 0 holds.

OH_n^ell is the quotient of OSym_n (x) R_ell by the mixed infinite
Grassmannian relations. Elements are kept in the normal form
sum s_lambda (x) r with lambda inside the n x n' box, n' = ell - n.
"""

import logging
import random
from functools import lru_cache

from . import osym
from .combinatorics import (complement, enum_grpar, nebar_count, partition, partitions_of,
                            size, transpose)
from .errors import InternalError
from .qpi_scalars import GPScalar, pi_q2, q_power, qp_binom

logger = logging.getLogger(__name__)

DIRECTIONS = ('forward', 'inverse')


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _check_ell(ell):
    if not isinstance(ell, int) or ell < 0:
        raise ValueError(f"ell must be a nonnegative integer, got {ell!r}")


def _check_n(n, ell):
    _check_ell(ell)
    if not isinstance(n, int) or not 0 <= n <= ell:
        raise ValueError(f"n must satisfy 0 <= n <= ell = {ell}, got {n!r}")


def rank_parameter(ell):
    """Number m of even generators g_1, ..., g_m of R_ell"""
    _check_ell(ell)
    return ell // 2 if ell % 2 == 0 else (ell - 1) // 2


# The base ring R_ell

class REllElem:
    """
    Element of R_ell = Sym_m[c]

    Terms are {(gexp, cbit): integer}, where gexp is the exponent vector of
    g_1 ... g_m and cbit says whether the monomial carries c.
    """

    __slots__ = ('ell', 'terms')

    def __init__(self, ell, terms=None):
        _check_ell(ell)
        self.ell = ell
        self.terms = {}
        if terms:
            m = rank_parameter(ell)
            for (gexp, cbit), c in terms.items():
                gexp = tuple(int(a) for a in gexp)
                if len(gexp) != m or any(a < 0 for a in gexp) or cbit not in (0, 1):
                    raise ValueError(f"Monomial {(list(gexp), cbit)} does not belong to R_{ell}")
                self._accumulate((gexp, cbit), int(c))

    def _vanishes(self, key):
        gexp, cbit = key
        if not cbit or self.ell % 2:
            return False
        # c * g_{ell/2} = 0, and c = 0 outright when ell = 0
        return not gexp or gexp[-1] > 0

    def _accumulate(self, key, c):
        if not c or self._vanishes(key):
            return
        total = self.terms.get(key, 0) + c
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    @classmethod
    def one(cls, ell):
        return cls(ell, {((0,) * rank_parameter(ell), 0): 1})

    @classmethod
    def zero(cls, ell):
        return cls(ell)

    @classmethod
    def g(cls, r, ell):
        """The r-th even elementary generator; g_0 = 1 and g_r = 0 past m"""
        m = rank_parameter(ell)
        if r < 0 or r > m:
            return cls(ell)
        gexp = [0] * m
        if r:
            gexp[r - 1] = 1
        return cls(ell, {(tuple(gexp), 0): 1})

    @classmethod
    def c(cls, ell):
        return cls(ell, {((0,) * rank_parameter(ell), 1): 1})

    def _coerce(self, other):
        if isinstance(other, int):
            return REllElem.one(self.ell).scale(other)
        if not isinstance(other, REllElem):
            raise TypeError(f"Expected an REllElem, got {other!r}")
        if other.ell != self.ell:
            raise ValueError(f"Mismatched base rings R_{self.ell} and R_{other.ell}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        result = REllElem(self.ell)
        result.terms = dict(self.terms)
        for key, c in other.terms.items():
            result._accumulate(key, c)
        return result

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        result = REllElem(self.ell)
        for (ga, ca), x in self.terms.items():
            for (gb, cb), y in other.terms.items():
                if ca and cb:
                    continue
                gexp = tuple(a + b for a, b in zip(ga, gb))
                result._accumulate((gexp, ca | cb), x * y)
        return result

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return self._coerce(other) * self

    def scale(self, c):
        result = REllElem(self.ell)
        if c:
            result.terms = {key: c * v for key, v in self.terms.items()}
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = REllElem.one(self.ell).scale(other)
        if not isinstance(other, REllElem):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.ell, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def even_part(self):
        return {gexp: c for (gexp, cbit), c in self.terms.items() if not cbit}

    @property
    def odd_part(self):
        return {gexp: c for (gexp, cbit), c in self.terms.items() if cbit}

    def constant_term(self):
        return self.terms.get(((0,) * rank_parameter(self.ell), 0), 0)

    @staticmethod
    def key_degree(key):
        gexp, cbit = key
        return sum(4 * (i + 1) * a for i, a in enumerate(gexp)) + 2 * cbit

    def degree(self):
        return max((self.key_degree(key) for key in self.terms), default=-1)

    def parity(self):
        parities = {cbit for _, cbit in self.terms}
        if len(parities) > 1:
            raise ValueError(f"{self} is not homogeneous for the parity grading")
        return parities.pop() if parities else 0

    def retruncate(self, ell):
        """Image under R_self.ell -> R_ell, g_r -> g_r (or 0 past the new m), c -> c"""
        _check_ell(ell)
        m = rank_parameter(ell)
        result = REllElem(ell)
        for (gexp, cbit), c in self.terms.items():
            if any(a for a in gexp[m:]):
                continue
            new = tuple(gexp[:m]) + (0,) * (m - len(gexp[:m]))
            result._accumulate((new, cbit), c)
        return result

    def to_json(self):
        return {
            'ell': self.ell,
            'even': [{'g': list(g), 'coeff': c} for g, c in sorted(self.even_part.items())],
            'odd': [{'g': list(g), 'coeff': c} for g, c in sorted(self.odd_part.items())],
        }

    @classmethod
    def from_json(cls, data):
        try:
            terms = {}
            for item in data['even']:
                terms[(tuple(item['g']), 0)] = item['coeff']
            for item in data['odd']:
                terms[(tuple(item['g']), 1)] = item['coeff']
            return cls(data['ell'], terms)
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid R_ell JSON: {data!r}") from e

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for (gexp, cbit), c in sorted(self.terms.items(), key=lambda kv: (self.key_degree(kv[0]), kv[0])):
            factors = [f'g{i + 1}' if a == 1 else f'g{i + 1}^{a}' for i, a in enumerate(gexp) if a]
            if cbit:
                factors.append('c')
            label = '*'.join(factors)
            if not label:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(label)
            elif c == -1:
                pieces.append('-' + label)
            else:
                pieces.append(f'{c}*{label}')
        return ' + '.join(pieces).replace('+ -', '- ')

    def __repr__(self):
        return f"REllElem({self.ell}, {self})"


@lru_cache(maxsize=None)
def _theta_e(r, ell):
    if r % 2 == 0:
        return REllElem.g(r // 2, ell).scale(_sign(r // 2))
    return (REllElem.g(r // 2, ell) * REllElem.c(ell)).scale(_sign(r // 2))


def rell_from_osym(x, ell):
    """
    Image of x in R_ell

    e_{2r} maps to (-1)^r g_r and e_{2r+1} to (-1)^r g_r c; the product of
    the images is taken in Sym_m[c].

    Args:
        x: OSymElem
        ell: Truncation parameter

    Returns:
        REllElem
    """
    _check_ell(ell)
    result = REllElem(ell)
    for lam, coeff in osym.e_basis(x).items():
        term = REllElem.one(ell).scale(coeff)
        for r in lam:
            term = term * _theta_e(r, ell)
            if not term:
                break
        result = result + term
    return result


@lru_cache(maxsize=None)
def _dot_h(s, ell):
    return rell_from_osym(osym.h(s), ell)


@lru_cache(maxsize=None)
def _dot_e(s, ell):
    return rell_from_osym(osym.e_elem(s), ell)


def dot_h(s, ell):
    """h_s in R_ell"""
    return _dot_h(s, ell) if s >= 0 else REllElem(ell)


def dot_e(s, ell):
    """e_s in R_ell"""
    return _dot_e(s, ell) if s >= 0 else REllElem(ell)


def complete_even(r, ell):
    """
    The r-th even complete symmetric function in Sym_m, from
    sum_i (-1)^i g_i H_{r-i} = 0 for r > 0
    """
    if r < 0:
        return REllElem(ell)
    values = [REllElem.one(ell)]
    for k in range(1, r + 1):
        total = REllElem(ell)
        for i in range(1, k + 1):
            total = total + (REllElem.g(i, ell) * values[k - i]).scale(_sign(i + 1))
        values.append(total)
    return values[r]


def rell_dimension(ell, max_degree):
    """Graded dimension of R_ell through degree max_degree"""
    m = rank_parameter(ell)
    total = GPScalar()
    for d in range(0, max_degree + 1, 2):
        for cbit in (0, 1):
            weight, rem = divmod(d - 2 * cbit, 4)
            if weight < 0 or rem:
                continue
            # g-monomials of weight w correspond to partitions of w with parts <= m
            monomials = partitions_of(weight, m) if m else (((),) if weight == 0 else ())
            if cbit and ell % 2 == 0:
                monomials = [lam for lam in monomials if m and m not in lam]
            if monomials:
                total = total + q_power(d, cbit).scale(c=len(monomials))
    return total


# OH_n^ell

class OHElem:
    """
    Element of OH_n^ell in normal form

    Coefficients are integers keyed by (lambda, rkey) with lambda in the
    n x n' box and rkey a monomial key of R_ell. The basis element
    s_lambda (x) r has degree 2|lambda| + deg r and parity |lambda| + par r.
    """

    __slots__ = ('n', 'ell', 'coeffs')

    def __init__(self, n, ell, coeffs=None):
        _check_n(n, ell)
        self.n = n
        self.ell = ell
        self.coeffs = {}
        if coeffs:
            for (lam, rkey), c in coeffs.items():
                lam = partition(lam)
                if len(lam) > n or (lam and lam[0] > ell - n):
                    raise ValueError(f"Partition {list(lam)} is not in the {n} x {ell - n} box")
                self._accumulate((lam, rkey), int(c))

    def _accumulate(self, key, c):
        if not c:
            return
        total = self.coeffs.get(key, 0) + c
        if total:
            self.coeffs[key] = total
        else:
            self.coeffs.pop(key, None)

    @property
    def n_prime(self):
        return self.ell - self.n

    def _coerce(self, other):
        if isinstance(other, int):
            return oh_one(self.n, self.ell).scale(other)
        if not isinstance(other, OHElem):
            raise TypeError(f"Expected an OHElem, got {other!r}")
        if (other.n, other.ell) != (self.n, self.ell):
            raise ValueError(f"Mismatched algebras OH_{self.n}^{self.ell} and OH_{other.n}^{other.ell}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        result = OHElem(self.n, self.ell)
        result.coeffs = dict(self.coeffs)
        for key, c in other.coeffs.items():
            result._accumulate(key, c)
        return result

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return oh_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return oh_mul(self._coerce(other), self)

    def scale(self, c):
        result = OHElem(self.n, self.ell)
        if c:
            result.coeffs = {key: c * v for key, v in self.coeffs.items()}
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = oh_one(self.n, self.ell).scale(other)
        if not isinstance(other, OHElem):
            return NotImplemented
        return (self.n, self.ell, self.coeffs) == (other.n, other.ell, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.ell, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def r_coefficient(self, lam):
        """The R_ell-coefficient of s_lambda"""
        lam = partition(lam)
        return REllElem(self.ell, {rkey: c for (mu, rkey), c in self.coeffs.items() if mu == lam})

    def by_partition(self):
        result = {}
        for (lam, rkey), c in self.coeffs.items():
            result.setdefault(lam, REllElem(self.ell))._accumulate(rkey, c)
        return result

    def degree(self):
        return max((2 * size(lam) + REllElem.key_degree(rkey) for lam, rkey in self.coeffs), default=-1)

    def parity(self):
        parities = {(size(lam) + rkey[1]) % 2 for lam, rkey in self.coeffs}
        if len(parities) > 1:
            raise ValueError(f"{self} is not homogeneous for the parity grading")
        return parities.pop() if parities else 0

    def component(self, degree):
        result = OHElem(self.n, self.ell)
        result.coeffs = {(lam, rkey): c for (lam, rkey), c in self.coeffs.items()
                         if 2 * size(lam) + REllElem.key_degree(rkey) == degree}
        return result

    def to_json(self):
        terms = []
        for lam, r in sorted(self.by_partition().items(), key=lambda kv: (size(kv[0]), kv[0])):
            data = r.to_json()
            terms.append({'lambda': list(lam), 'r_even': data['even'], 'r_odd': data['odd']})
        return {'n': self.n, 'ell': self.ell, 'terms': terms}

    @classmethod
    def from_json(cls, data):
        try:
            n, ell = data['n'], data['ell']
            result = cls(n, ell)
            for item in data['terms']:
                r = REllElem.from_json({'ell': ell, 'even': item['r_even'], 'odd': item['r_odd']})
                result = result + oh_from_pair(osym.schur(item['lambda']), r, n)
            return result
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid OH JSON: {data!r}") from e

    def __str__(self):
        if not self.coeffs:
            return '0'
        pieces = []
        for lam, r in sorted(self.by_partition().items(), key=lambda kv: (size(kv[0]), kv[0])):
            label = f"s{list(lam)}" if lam else '1'
            pieces.append(f"{label}(x)({r})")
        return ' + '.join(pieces)

    def __repr__(self):
        return f"OHElem({self.n}, {self.ell}, {self})"


def _one_key(ell):
    return ((0,) * rank_parameter(ell), 0)


def oh_one(n, ell):
    return OHElem(n, ell, {((), _one_key(ell)): 1})


def _in_box(lam, n, n_prime):
    return len(lam) <= n and (not lam or lam[0] <= n_prime)


@lru_cache(maxsize=None)
def _normal_schur(lam, n, ell):
    """Normal form of s_lambda (x) 1 for ht(lambda) <= n, as ((key, coeff), ...)"""
    n_prime = ell - n
    if _in_box(lam, n, n_prime):
        return (((lam, _one_key(ell)), 1),)
    total = {}

    def add(key, c):
        value = total.get(key, 0) + c
        if value:
            total[key] = value
        else:
            total.pop(key, None)

    for mu, a in osym.schur(lam).coeffs.items():
        first, rest = mu[0], mu[1:]
        if first <= n_prime:
            raise InternalError(f"h-expansion of s{list(lam)} contains h{list(mu)} inside the box")
        rest_size = size(rest)
        for s in range(1, first + 1):
            r_part = dot_e(s, ell)
            if not r_part:
                continue
            sign = -_sign(s) * _sign(s * rest_size)
            lowered = osym.straighten((first - s,) + rest, a * sign)
            for nu, b in osym.truncated_schur(lowered, n).items():
                if size(nu) >= size(lam):
                    raise InternalError(f"Reduction of s{list(lam)} did not lower the degree")
                for (kappa, rkey), v in _normal_schur(nu, n, ell):
                    product = REllElem(ell, {rkey: b * v}) * r_part
                    for key, w in product.terms.items():
                        add((kappa, key), w)
    logger.debug("Normalized s%s in OH_%d^%d into %d terms", list(lam), n, ell, len(total))
    return tuple(total.items())


def oh_normalize(raw, n, ell):
    """
    Bring a combination of s_lambda (x) r into normal form

    Args:
        raw: Mapping {partition: REllElem} with partitions of height at most n
        n, ell: The algebra OH_n^ell

    Returns:
        OHElem
    """
    _check_n(n, ell)
    result = OHElem(n, ell)
    for lam, r in raw.items():
        lam = partition(lam)
        if len(lam) > n:
            raise ValueError(f"Partition {list(lam)} has more than {n} rows")
        if isinstance(r, int):
            r = REllElem.one(ell).scale(r)
        if r.ell != ell:
            raise ValueError(f"Coefficient lives in R_{r.ell}, expected R_{ell}")
        if not r:
            continue
        for (kappa, rkey), v in _normal_schur(lam, n, ell):
            product = REllElem(ell, {rkey: v}) * r
            for key, w in product.terms.items():
                result._accumulate((kappa, key), w)
    return result


def oh_from_pair(a, r, n):
    """The element a (x) r for a in OSym (mapped to OSym_n) and r in R_ell"""
    if isinstance(r, int):
        raise TypeError("The R_ell coefficient must be an REllElem")
    raw = {lam: r.scale(c) for lam, c in osym.truncated_schur(a, n).items()}
    return oh_normalize(raw, n, r.ell)


def oh_from_osym(x, n, ell):
    """x (x) 1"""
    return oh_from_pair(x, REllElem.one(ell), n)


def oh_from_rell(r, n):
    """1 (x) r"""
    return oh_normalize({(): r}, n, r.ell)


def oh_from_schur(lam, n, ell):
    """s_lambda (x) 1; zero when lambda has more than n rows"""
    lam = partition(lam)
    if len(lam) > n:
        _check_n(n, ell)
        return OHElem(n, ell)
    return oh_normalize({lam: REllElem.one(ell)}, n, ell)


@lru_cache(maxsize=None)
def _schur_product(lam, mu, n):
    return tuple(osym.truncated_schur(osym.mul(osym.schur(lam), osym.schur(mu)), n).items())


def oh_mul(a, b):
    """
    Product in OH_n^ell

    (s_lambda (x) r)(s_mu (x) r') = (-1)^{par(r)|mu|} s_lambda s_mu (x) r r'
    """
    if not isinstance(a, OHElem) or not isinstance(b, OHElem):
        raise TypeError("oh_mul expects two OHElem values")
    if (a.n, a.ell) != (b.n, b.ell):
        raise ValueError(f"Mismatched algebras OH_{a.n}^{a.ell} and OH_{b.n}^{b.ell}")
    n, ell = a.n, a.ell
    raw = {}
    for (lam, ra), x in a.coeffs.items():
        for (mu, rb), y in b.coeffs.items():
            r = REllElem(ell, {ra: x * _sign(ra[1] * size(mu))}) * REllElem(ell, {rb: y})
            if not r:
                continue
            for nu, c in _schur_product(lam, mu, n):
                raw[nu] = raw.get(nu, REllElem(ell)) + r.scale(c)
    return oh_normalize(raw, n, ell)


def oh_product(factors, n, ell):
    result = oh_one(n, ell)
    for f in factors:
        result = oh_mul(result, f)
    return result


def top_partition(n, ell):
    """The rectangle (n'^n)"""
    return partition([ell - n] * n)


def oh_trace(a):
    """
    The R_ell-linear trace: tr(s_lambda (x) 1) = 1 for lambda = (n'^n), 0 otherwise

    Returns:
        REllElem
    """
    return a.r_coefficient(top_partition(a.n, a.ell))


def oh_basis(n, ell):
    """Partitions lambda in the n x n' box; s_lambda (x) 1 is an R_ell-basis"""
    _check_n(n, ell)
    return enum_grpar(n, ell - n)


def oh_rank(n, ell):
    """Graded rank of OH_n^ell as a free R_ell-module"""
    total = GPScalar()
    for lam in oh_basis(n, ell):
        total = total + pi_q2(size(lam))
    return total


def expected_oh_rank(n, ell):
    """q^{nn'} times the (q, pi)-binomial coefficient"""
    return q_power(n * (ell - n)) * qp_binom(ell, n)


def random_oh(n, ell, rng=None, max_coeff=2, max_terms=3):
    """A random element built from basis vectors and R_ell generators"""
    rng = rng or random.Random(0)
    basis = oh_basis(n, ell)
    generators = [REllElem.one(ell), REllElem.c(ell)] + [REllElem.g(r, ell) for r in range(1, rank_parameter(ell) + 1)]
    result = OHElem(n, ell)
    for _ in range(rng.randint(1, max_terms)):
        lam = rng.choice(basis)
        r = rng.choice(generators)
        c = rng.randint(-max_coeff, max_coeff)
        result = result + oh_normalize({lam: r.scale(c)}, n, ell)
    return result


# The isomorphisms psi, their inverses and delta

@lru_cache(maxsize=None)
def _psi_h(r, source_n, ell, direction):
    target_n = ell - source_n
    total = OHElem(target_n, ell)
    for s in range(r + 1):
        if direction == 'forward':
            sign = _sign((source_n + 1) * (r - s))
        else:
            sign = _sign((target_n + r) * (r - s) + target_n * s)
        total = total + oh_from_pair(osym.e_elem(r - s), dot_h(s, ell), target_n).scale(sign)
    return total


@lru_cache(maxsize=None)
def _psi_h_word(mu, source_n, ell, direction):
    return oh_product([_psi_h(r, source_n, ell, direction) for r in mu], ell - source_n, ell)


def psi_image_of_osym(x, n, ell, direction='forward'):
    """Image of x (x) 1 in OH_n^ell under psi (or psi^{-1} when n is the source of it)"""
    if direction not in DIRECTIONS:
        raise ValueError(f"Direction must be one of {DIRECTIONS}, got {direction!r}")
    total = OHElem(ell - n, ell)
    for mu, c in osym.OSymElem.coerce(x).coeffs.items():
        total = total + _psi_h_word(mu, n, ell, direction).scale(c)
    return total


def psi_iso(a, direction='forward'):
    """
    The R_ell-superalgebra isomorphism OH_n^ell -> OH_{n'}^ell and its inverse

    Forward sends h_r (x) 1 to sum_s (-1)^{(n+1)(r-s)} e_{r-s} (x) h_s;
    inverse, read with n the target index, sends
    h_r (x) 1 to sum_s (-1)^{(n+r)(r-s)+ns} e_{r-s} (x) h_s.
    Both are extended multiplicatively through h-expansions.

    Args:
        a: OHElem
        direction: 'forward' or 'inverse'

    Returns:
        OHElem in OH_{ell - a.n}^ell
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"Direction must be one of {DIRECTIONS}, got {direction!r}")
    n, ell = a.n, a.ell
    target_n = ell - n
    result = OHElem(target_n, ell)
    for lam, r in a.by_partition().items():
        image = psi_image_of_osym(osym.schur(lam), n, ell, direction)
        result = result + oh_mul(image, oh_from_rell(r, target_n))
    return result


def psi_closed_e(r, n, ell, direction='forward'):
    """The closed formula for the image of e_r (x) 1"""
    target_n = ell - n
    total = OHElem(target_n, ell)
    for s in range(r + 1):
        if direction == 'forward':
            sign = _sign((n + r) * (r - s))
        else:
            sign = _sign((target_n + 1) * (r - s) + target_n * s)
        total = total + oh_from_pair(osym.h(r - s), dot_e(s, ell), target_n).scale(sign)
    return total


def delta_auto(a):
    """delta = psi_{n'} o psi_n, an automorphism of OH_n^ell"""
    return psi_iso(psi_iso(a, 'forward'), 'forward')


_DELTA_FAMILIES = {
    'h': (osym.h, False),
    'e': (osym.e_elem, True),
    'eps': (osym.eps, False),
    'eta': (osym.eta, True),
}


def delta_closed(family, r, n, ell):
    """
    The closed formula for delta on h_r, e_r, eps_r or eta_r (x) 1, r >= 1

    (-1)^{ell r} x_r (x) 1 + (-1)^{ell(r-1)} (1 + (-1)^{n+r}) x_{r-1} (x) o
    for h and eps; the second sign is (-1)^{(ell+1)(r-1)} for e and eta.
    """
    if family not in _DELTA_FAMILIES:
        raise ValueError(f"Unknown family {family!r}, expected one of {sorted(_DELTA_FAMILIES)}")
    if r < 1:
        raise ValueError(f"The closed formula needs r >= 1, got {r}")
    make, shifted = _DELTA_FAMILIES[family]
    first = oh_from_osym(make(r), n, ell).scale(_sign(ell * r))
    factor = 1 + _sign(n + r)
    if not factor:
        return first
    sign = _sign((ell + 1) * (r - 1)) if shifted else _sign(ell * (r - 1))
    second = oh_from_pair(make(r - 1), dot_e(1, ell), n).scale(sign * factor)
    return first + second


# Specializations

def alpha(a):
    """
    The surjection OH_n^ell -> R_{n'} killing positive-degree OSym_n parts

    Returns:
        REllElem in R_{n'}
    """
    return a.r_coefficient(()).retruncate(a.ell - a.n)


def oh_bar(a):
    """Image in the specialization over the ground ring: {lambda: integer}"""
    one = _one_key(a.ell)
    return {lam: c for (lam, rkey), c in a.coeffs.items() if rkey == one}


def bar_mul(lam, mu, n, ell):
    """Product of two specialized Schur classes"""
    return oh_bar(oh_mul(oh_from_schur(lam, n, ell), oh_from_schur(mu, n, ell)))


def bar_trace(values, n, ell):
    return values.get(top_partition(n, ell), 0)


def trace_gram(n, ell):
    """
    The specialized trace form on the Schur basis

    Returns:
        (basis, matrix) with matrix[i][j] = tr(s_i s_j) after specialization
    """
    basis = oh_basis(n, ell)
    matrix = [[bar_trace(bar_mul(lam, mu, n, ell), n, ell) for mu in basis] for lam in basis]
    logger.debug("Trace Gram matrix of OH_%d^%d has size %d", n, ell, len(basis))
    return basis, matrix


def gram_pairing_check(n, ell):
    """
    Check that the Gram matrix is a signed permutation pairing lambda with
    its complement in the box

    Returns:
        None on success, or a witness string
    """
    basis, matrix = trace_gram(n, ell)
    index = {lam: i for i, lam in enumerate(basis)}
    for i, lam in enumerate(basis):
        partner = index[complement(lam, n, ell - n)]
        for j, value in enumerate(matrix[i]):
            expected_nonzero = j == partner
            if expected_nonzero and value not in (1, -1):
                return f"tr(s{list(lam)} s{list(basis[j])}) = {value}, expected +-1"
            if not expected_nonzero and value:
                return f"tr(s{list(lam)} s{list(basis[j])}) = {value}, expected 0"
    return None


def sgn_function(mu, n, ell):
    """
    The sign sgn(mu) for mu in the n' x n box, read off the Gram matrix:
    (-1)^{NEbar(mu)} tr(s_lambda s_{mu^t}) with lambda complementary to mu^t
    """
    mu = partition(mu)
    n_prime = ell - n
    if not _in_box(mu, n_prime, n):
        raise ValueError(f"Partition {list(mu)} is not in the {n_prime} x {n} box")
    nu = transpose(mu)
    lam = complement(nu, n, n_prime)
    value = bar_trace(bar_mul(lam, nu, n, ell), n, ell)
    return _sign(nebar_count(mu)) * value


def sgn_from_lr(mu, n, ell):
    """sgn(mu) via the odd Littlewood-Richardson coefficient at the rectangle"""
    mu = partition(mu)
    nu = transpose(mu)
    lam = complement(nu, n, ell - n)
    return _sign(nebar_count(mu)) * osym.lr(lam, nu).get(top_partition(n, ell), 0)
