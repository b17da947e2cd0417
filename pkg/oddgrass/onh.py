"""
Odd polynomials, odd Demazure operators and the odd nil-Hecke action
"""

import logging
import re
from functools import lru_cache

from . import osym
from .combinatorics import (all_permutations, binom2, compose, inverse, longest, omega_word,
                            partition, perm_length, reduced_word, simple)
from .errors import InternalError
from .linalg import solve_combination, vectors_rank
from .qpi_scalars import GPScalar, pi_q2

logger = logging.getLogger(__name__)


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _mono_sign(kappa, kappa2):
    """Sign of x^kappa x^kappa2 = +- x^{kappa + kappa2}"""
    total = 0
    for i in range(len(kappa)):
        if kappa[i]:
            total += kappa[i] * sum(kappa2[:i])
    return _sign(total)


@lru_cache(maxsize=None)
def compositions(n, total):
    """Exponent vectors of length n with the given sum, in decreasing lex order"""
    if n == 0:
        return ((),) if total == 0 else ()
    result = []
    for first in range(total, -1, -1):
        for rest in compositions(n - 1, total - first):
            result.append((first,) + rest)
    return tuple(result)


class OPolElem:
    """
    Element of OPol_n, the odd polynomials in x_1, ..., x_n

    Monomials are stored as exponent vectors kappa, meaning
    x_1^{kappa_1} ... x_n^{kappa_n}; x^kappa has degree 2|kappa| and
    parity |kappa| mod 2.
    """

    __slots__ = ('n', 'coeffs')

    def __init__(self, n, coeffs=None):
        if n < 0:
            raise ValueError(f"Number of variables must be nonnegative, got {n}")
        self.n = n
        self.coeffs = {}
        if coeffs:
            for kappa, c in coeffs.items():
                kappa = tuple(int(k) for k in kappa)
                if len(kappa) != n or any(k < 0 for k in kappa):
                    raise ValueError(f"Exponent vector {list(kappa)} does not belong to OPol_{n}")
                self._accumulate(kappa, int(c))

    def _accumulate(self, kappa, c):
        if not c:
            return
        total = self.coeffs.get(kappa, 0) + c
        if total:
            self.coeffs[kappa] = total
        else:
            self.coeffs.pop(kappa, None)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, kappa, c=1):
        kappa = tuple(kappa)
        return cls(len(kappa), {kappa: c})

    def _check(self, other):
        if not isinstance(other, OPolElem):
            raise TypeError(f"Expected an OPolElem, got {other!r}")
        if other.n != self.n:
            raise ValueError(f"Mismatched variable counts {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        result = OPolElem(self.n)
        result.coeffs = dict(self.coeffs)
        for kappa, c in other.coeffs.items():
            result._accumulate(kappa, c)
        return result

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        result = OPolElem(self.n)
        if c:
            result.coeffs = {kappa: c * v for kappa, v in self.coeffs.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return opol_mul(self, other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, OPolElem):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def half_degrees(self):
        return {sum(kappa) for kappa in self.coeffs}

    def component(self, half_degree):
        return OPolElem(self.n, {k: c for k, c in self.coeffs.items() if sum(k) == half_degree})

    def leading_monomial(self):
        """Largest exponent vector in lex order, None for zero"""
        return max(self.coeffs) if self.coeffs else None

    def to_json(self):
        return {'n': self.n, 'terms': [[list(k), c] for k, c in sorted(self.coeffs.items())]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data['n'], {tuple(k): c for k, c in data['terms']})
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid OPol JSON: {data!r}") from e

    def __str__(self):
        if not self.coeffs:
            return '0'
        pieces = []
        for kappa in sorted(self.coeffs, reverse=True):
            c = self.coeffs[kappa]
            factors = [f"x{i + 1}" + (f"^{k}" if k > 1 else '') for i, k in enumerate(kappa) if k]
            label = '*'.join(factors)
            if not label:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(label)
            elif c == -1:
                pieces.append('-' + label)
            else:
                pieces.append(f"{c}*{label}")
        return ' + '.join(pieces).replace('+ -', '- ')

    def __repr__(self):
        return f"OPolElem({self.n}: {self})"


def x(i, n):
    """The variable x_i of OPol_n"""
    if not 1 <= i <= n:
        raise ValueError(f"x_{i} is not a variable of OPol_{n}")
    kappa = [0] * n
    kappa[i - 1] = 1
    return OPolElem.monomial(kappa)


def monomial_of(lam, n):
    """x^lam = x_1^{lam_1} ... x_n^{lam_n}"""
    lam = partition(lam)
    if len(lam) > n:
        raise ValueError(f"Partition {list(lam)} has more than {n} rows")
    return OPolElem.monomial(tuple(lam) + (0,) * (n - len(lam)))


def opol_mul(f, g):
    """Product in OPol_n; x_j x_i = -x_i x_j for i != j"""
    f._check(g)
    result = OPolElem(f.n)
    for k1, c1 in f.coeffs.items():
        for k2, c2 in g.coeffs.items():
            kappa = tuple(a + b for a, b in zip(k1, k2))
            result._accumulate(kappa, _mono_sign(k1, k2) * c1 * c2)
    return result


def product(factors, n):
    result = OPolElem.one(n)
    for f in factors:
        result = opol_mul(result, f)
    return result


def _variable_power(i, k, n, c=1):
    kappa = [0] * n
    kappa[i - 1] = k
    return OPolElem(n, {tuple(kappa): c})


def sn_act(w, f):
    """
    The signed action of S_n by superalgebra automorphisms

    ^w x_i = (-1)^{length(w) + w(i) - i} x_{w(i)}
    """
    w = tuple(w)
    if len(w) != f.n:
        raise ValueError(f"Permutation {list(w)} does not act on OPol_{f.n}")
    length = perm_length(w)
    result = OPolElem(f.n)
    for kappa, c in f.coeffs.items():
        image = OPolElem.one(f.n).scale(c)
        for i, k in enumerate(kappa, 1):
            if k:
                sign = _sign((length + w[i - 1] - i) * k)
                image = opol_mul(image, _variable_power(w[i - 1], k, f.n, sign))
        result = result + image
    return result


@lru_cache(maxsize=None)
def _demazure_monomial(j, kappa):
    n = len(kappa)
    a = next((i for i, k in enumerate(kappa) if k), None)
    if a is None:
        return ()
    rest = list(kappa)
    rest[a] -= 1
    rest = tuple(rest)
    result = OPolElem(n)
    head = (1 if a + 1 == j else 0) - (1 if a + 1 == j + 1 else 0)
    if head:
        result._accumulate(rest, head)
    twisted = sn_act(simple(j, n), _variable_power(a + 1, 1, n))
    tail = OPolElem(n, dict(_demazure_monomial(j, rest)))
    result = result + opol_mul(twisted, tail)
    return tuple(result.coeffs.items())


def demazure(j, f):
    """
    The odd Demazure operator d_j

    d_j(x_i) = delta_{i,j} - delta_{i,j+1} and
    d_j(fg) = d_j(f) g + (^{s_j} f) d_j(g), computed by peeling the
    lowest-index variable off each monomial.
    """
    if not 1 <= j < f.n:
        raise ValueError(f"d_{j} is not defined on OPol_{f.n}")
    result = OPolElem(f.n)
    for kappa, c in f.coeffs.items():
        for mono, v in _demazure_monomial(j, kappa):
            result._accumulate(mono, c * v)
    return result


@lru_cache(maxsize=None)
def _right_tau_monomial(j, kappa):
    n = len(kappa)
    b = next((i for i in range(n - 1, -1, -1) if kappa[i]), None)
    if b is None:
        return ()
    rest = list(kappa)
    rest[b] -= 1
    rest = tuple(rest)
    result = OPolElem(n)
    head = (1 if b + 1 == j else 0) - (1 if b + 1 == j + 1 else 0)
    if head:
        result._accumulate(rest, head)
    twisted = sn_act(simple(j, n), _variable_power(b + 1, 1, n))
    front = OPolElem(n, dict(_right_tau_monomial(j, rest)))
    result = result + opol_mul(front, twisted)
    return tuple(result.coeffs.items())


def right_tau(f, j):
    """
    The right action f . tau_j

    x_i . tau_j = delta_{i,j} - delta_{i,j+1} and
    (fg) . tau_j = f (g . tau_j) + (f . tau_j)(^{s_j} g), peeling the
    highest-index variable off each monomial.
    """
    if not 1 <= j < f.n:
        raise ValueError(f"tau_{j} does not act on OPol_{f.n}")
    result = OPolElem(f.n)
    for kappa, c in f.coeffs.items():
        for mono, v in _right_tau_monomial(j, kappa):
            result._accumulate(mono, c * v)
    return result


# Operator words

_TOKEN = re.compile(r'^(x|t)(\d+)$')


class ONHWord:
    """
    A word in the generators x_i and tau_j of ONH_n with an integer coefficient

    Generators are stored left to right as ('x', i) or ('t', j); as an
    operator the rightmost generator acts first.
    """

    __slots__ = ('n', 'gens', 'coeff')

    def __init__(self, n, gens=(), coeff=1):
        self.n = n
        self.gens = tuple(gens)
        self.coeff = coeff
        for kind, i in self.gens:
            if kind == 'x' and not 1 <= i <= n:
                raise ValueError(f"x{i} is not a generator of ONH_{n}")
            if kind == 't' and not 1 <= i < n:
                raise ValueError(f"t{i} is not a generator of ONH_{n}")
            if kind not in ('x', 't'):
                raise ValueError(f"Unknown generator kind {kind!r}")

    @classmethod
    def parse(cls, text, n):
        """
        Parse a word such as "x1 t1 x2"

        Raises:
            ValueError: on an unknown token
        """
        gens = []
        for token in text.split():
            match = _TOKEN.match(token)
            if not match:
                raise ValueError(f"Cannot parse generator {token!r}")
            gens.append((match.group(1), int(match.group(2))))
        return cls(n, gens)

    @classmethod
    def taus(cls, word, n, coeff=1):
        return cls(n, [('t', j) for j in word], coeff)

    def __mul__(self, other):
        if isinstance(other, int):
            return ONHWord(self.n, self.gens, self.coeff * other)
        if other.n != self.n:
            raise ValueError(f"Mismatched ONH ranks {self.n} and {other.n}")
        return ONHWord(self.n, self.gens + other.gens, self.coeff * other.coeff)

    def __neg__(self):
        return ONHWord(self.n, self.gens, -self.coeff)

    def gamma(self):
        """x_i -> x_{n+1-i}, tau_j -> -tau_{n-j}"""
        gens, sign = [], self.coeff
        for kind, i in self.gens:
            if kind == 'x':
                gens.append(('x', self.n + 1 - i))
            else:
                gens.append(('t', self.n - i))
                sign = -sign
        return ONHWord(self.n, gens, sign)

    def star(self):
        """x_i -> x_i, tau_j -> -tau_j, reversing the word with the Koszul sign"""
        k = len(self.gens)
        taus = sum(1 for kind, _ in self.gens if kind == 't')
        return ONHWord(self.n, reversed(self.gens), self.coeff * _sign(binom2(k) + taus))

    def degree(self):
        return sum(2 if kind == 'x' else -2 for kind, _ in self.gens)

    def __str__(self):
        body = ' '.join(f"{kind}{i}" for kind, i in self.gens) or '1'
        return body if self.coeff == 1 else f"{self.coeff}*({body})"

    def __repr__(self):
        return f"ONHWord({self})"


def onh_apply(word, f):
    """Left action of an operator word on OPol_n"""
    if word.n != f.n:
        raise ValueError(f"ONH_{word.n} does not act on OPol_{f.n}")
    result = f
    for kind, i in reversed(word.gens):
        if kind == 'x':
            result = opol_mul(x(i, f.n), result)
        else:
            result = demazure(i, result)
    return result.scale(word.coeff)


def right_action(f, word):
    """Right action f . word; the leftmost generator acts first"""
    if word.n != f.n:
        raise ValueError(f"ONH_{word.n} does not act on OPol_{f.n}")
    result = f
    for kind, i in word.gens:
        if kind == 'x':
            result = opol_mul(result, x(i, f.n))
        else:
            result = right_tau(result, i)
    return result.scale(word.coeff)


def xi(n):
    """xi_n = x_{n-1} x_{n-2}^2 ... x_1^{n-1}"""
    return product([_variable_power(n - i, i, n) for i in range(1, n)], n)


def omega(n):
    """omega_n = tau_{w_n} for the fixed reduced word (n-1 ... 1)(n-1 ... 2) ... (n-1)"""
    return ONHWord.taus(omega_word(n), n)


def tau_word(w):
    """
    tau_w for the canonical reduced word of w

    The longest element uses the word of omega_n; every other permutation
    uses its lexicographically smallest reduced word.
    """
    w = tuple(w)
    n = len(w)
    if w == longest(n):
        return omega(n)
    return ONHWord.taus(reduced_word(w), n)


def xi_omega(f):
    """(xi omega)_n applied to f"""
    return opol_mul(xi(f.n), onh_apply(omega(f.n), f))


def omega_xi(f):
    """(omega xi)_n applied to f"""
    return onh_apply(omega(f.n), opol_mul(xi(f.n), f))


@lru_cache(maxsize=None)
def _schubert(w):
    n = len(w)
    u = compose(inverse(w), longest(n))
    return onh_apply(tau_word(u), xi(n))


def schubert(w, n=None):
    """
    The odd Schubert polynomial p_w = tau_{w^{-1} w_n} . xi_n

    Args:
        w: Permutation in one-line notation
        n: Optional rank, checked against len(w)
    """
    w = tuple(w)
    if n is not None and len(w) != n:
        raise ValueError(f"Permutation {list(w)} is not in S_{n}")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation")
    p = _schubert(w)
    return OPolElem(p.n, p.coeffs)


def schur_poly(lam, n):
    """The odd Schur polynomial s^{(n)}_lam = (omega xi)_n . x^lam"""
    return omega_xi(monomial_of(lam, n))


# OSym -> OPol_n

@lru_cache(maxsize=None)
def _h_poly(r, n):
    coeffs = {}
    for kappa in compositions(n, r):
        inversions = sum(kappa[i] * kappa[j] for i in range(n) for j in range(i))
        coeffs[kappa] = _sign(inversions)
    return OPolElem(n, coeffs)


@lru_cache(maxsize=None)
def _e_poly(r, n):
    coeffs = {kappa: 1 for kappa in compositions(n, r) if max(kappa, default=0) <= 1}
    return OPolElem(n, coeffs)


def e_poly(r, n):
    """e_r(x_1, ..., x_n)"""
    p = _e_poly(r, n)
    return OPolElem(n, p.coeffs)


def h_poly(r, n):
    """h_r(x_n, ..., x_1) = sum over n >= i_r >= ... >= i_1 >= 1 of x_{i_r} ... x_{i_1}"""
    p = _h_poly(r, n)
    return OPolElem(n, p.coeffs)


@lru_cache(maxsize=None)
def _pi_h(lam, n):
    return product([_h_poly(r, n) for r in lam], n)


@lru_cache(maxsize=None)
def _pi_e(lam, n):
    return product([_e_poly(r, n) for r in lam], n)


def osym_to_opol(elem, n):
    """The homomorphism pi_n : OSym -> OPol_n"""
    result = OPolElem(n)
    for lam, c in osym.OSymElem.coerce(elem).coeffs.items():
        result = result + _pi_h(lam, n).scale(c)
    return result


def sym_basis(n, half_degree):
    """Pairs (lam, e_lam(x_1..x_n)) for lam with parts <= n, a basis of OSym_n in this degree"""
    return [(lam, _pi_e(lam, n)) for lam in osym.osym_n_basis(n, half_degree)]


def opol_to_osym(f):
    """
    Express an element of OSym_n inside OPol_n as an OSym element

    Returns:
        OSymElem in the span of e_lam with parts <= n

    Raises:
        ValueError: if f is not odd symmetric
    """
    coeffs = {}
    for d in sorted(f.half_degrees()):
        basis = sym_basis(f.n, d)
        solution = solve_combination([p.coeffs for _, p in basis], f.component(d).coeffs)
        if solution is None:
            raise ValueError(f"{f} is not in OSym_{f.n}")
        for (lam, _), c in zip(basis, solution):
            if c:
                coeffs[lam] = c
    return osym.from_e_basis(coeffs)


@lru_cache(maxsize=None)
def _strip_sign(w):
    """tau_w p_w = tau_{w_n} xi_n, which is +-1"""
    n = len(w)
    constant = onh_apply(tau_word(w), _schubert(w))
    if set(constant.coeffs) != {(0,) * n} or abs(constant.coeffs[(0,) * n]) != 1:
        raise InternalError(f"tau_{list(w)} p_{list(w)} = {constant} is not +-1")
    return constant.coeffs[(0,) * n]


def decompose_over_osym(f):
    """
    Coefficients b_w in OSym_n with f = sum_w p_w b_w

    Permutations are stripped longest first. Once p_v b_v is removed for
    every v longer than w, tau_w kills the other terms of the remainder and
    sends p_w b_w to (tau_w p_w) b_w = +-b_w.

    Returns:
        Dictionary permutation -> OSymElem (e-expansion with parts <= n)

    Raises:
        InternalError: if a stripped coefficient is not odd symmetric or a remainder survives
    """
    n = f.n
    remainder = f
    result = {}
    for w in sorted(all_permutations(n), key=lambda w: (-perm_length(w), w)):
        image = onh_apply(tau_word(w), remainder)
        if image.is_zero():
            continue
        b = image.scale(_strip_sign(w))
        try:
            result[w] = opol_to_osym(b)
        except ValueError as e:
            raise InternalError(f"tau_{list(w)} sends the remainder of {f} outside OSym_{n}") from e
        remainder = remainder - opol_mul(_schubert(w), b)
    if not remainder.is_zero():
        raise InternalError(f"{remainder} survives the Schubert stripping of {f}")
    return result


def decompose_by_solve(f):
    """
    decompose_over_osym by an exact solve in each homogeneous component
    against the basis {p_w e_lam(x_1..x_n)}, free over OSym_n
    """
    n = f.n
    result = {}
    for d in sorted(f.half_degrees()):
        labels, columns = [], []
        for w in all_permutations(n):
            length = perm_length(w)
            if length > d:
                continue
            p = _schubert(w)
            for lam, e_lam in sym_basis(n, d - length):
                labels.append((w, lam))
                columns.append(opol_mul(p, e_lam).coeffs)
        solution = solve_combination(columns, f.component(d).coeffs)
        if solution is None:
            raise InternalError(f"{f} has no expansion over the odd Schubert basis")
        for (w, lam), c in zip(labels, solution):
            if c:
                result.setdefault(w, {})
                result[w][lam] = result[w].get(lam, 0) + c
    return {w: osym.from_e_basis(coeffs) for w, coeffs in result.items()}


def recompose(coeffs, n):
    """sum_w p_w pi_n(b_w), the inverse of decompose_over_osym"""
    result = OPolElem(n)
    for w, b in coeffs.items():
        result = result + opol_mul(_schubert(tuple(w)), osym_to_opol(b, n))
    return result


# Symmetries of OPol_n

def gamma_n(f):
    """The superalgebra involution x_i -> x_{n+1-i}"""
    result = OPolElem(f.n)
    for kappa, c in f.coeffs.items():
        crossings = sum(kappa[i] * kappa[j] for i in range(f.n) for j in range(i + 1, f.n))
        result._accumulate(tuple(reversed(kappa)), _sign(crossings) * c)
    return result


def star(f):
    """The superalgebra anti-involution fixing every x_i"""
    result = OPolElem(f.n)
    for kappa, c in f.coeffs.items():
        crossings = sum(kappa[i] * kappa[j] for i in range(f.n) for j in range(i + 1, f.n))
        result._accumulate(kappa, _sign(binom2(sum(kappa)) + crossings) * c)
    return result


# Graded dimensions and kernels

def opol_dimension(n, max_half_degree):
    """Graded dimension of OPol_n through degree 2 * max_half_degree"""
    total = GPScalar()
    for d in range(max_half_degree + 1):
        total = total + pi_q2(d).scale(c=len(compositions(n, d)))
    return total


def demazure_kernel_dimension(n, half_degree):
    """Dimension of the common kernel of d_1, ..., d_{n-1} in one degree"""
    monos = compositions(n, half_degree)
    if n < 2:
        return len(monos)
    images = []
    for kappa in monos:
        stacked = {}
        for j in range(1, n):
            for mono, v in _demazure_monomial(j, kappa):
                stacked[(j, mono)] = v
        images.append(stacked)
    return len(monos) - vectors_rank(images)


def in_image(j, target):
    """True if target = d_j(g) for some g of the matching degree"""
    if target.is_zero():
        return True
    degrees = target.half_degrees()
    if len(degrees) != 1:
        raise ValueError("in_image expects a homogeneous polynomial")
    d = degrees.pop()
    columns = [dict(_demazure_monomial(j, kappa)) for kappa in compositions(target.n, d + 1)]
    return solve_combination(columns, target.coeffs, integral=False) is not None


def leading_schur_check(lam, n):
    """The odd Schur polynomial has the form x^lam + lex-smaller monomials"""
    s = schur_poly(lam, n)
    lead = monomial_of(lam, n)
    top = next(iter(lead.coeffs))
    return s.coeffs.get(top) == 1 and all(kappa <= top for kappa in s.coeffs)
