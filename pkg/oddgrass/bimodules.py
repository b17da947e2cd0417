"""
The rank-one odd Grassmannian bimodules V_n^ell and U_n^ell

V_n^ell is an (OH_n^ell, OH_{n+1}^ell)-superbimodule, free as a right module
on v_n(x^r), 0 <= r <= n. U_n^ell is an (OH_{n+1}^ell, OH_n^ell)-superbimodule,
free as a left module on u_n(x^s), 0 <= s <= n. Vectors are always stored in
these bases; the action on the other side is computed inside odd polynomials,
where v_n(f) = f(x_{n+1}) and u_n(f) = f(x_1) after stripping the outer
variables.

The tilde bimodules carry the same underlying vectors with shifted gradings:
the left action on V_n^ell differs from the tilde one by (-1)^{n par(a)}, and
the left action on tilde U differs from U_n^ell by (-1)^{n' par(a)} with
n' = ell - n - 1. All computations run in the unshifted conventions and the
shift is applied by twist() at the boundary.
"""

import logging
from functools import lru_cache

from . import osym
from .combinatorics import binom2, partitions_of, sharp, size
from .errors import InternalError
from .grass_cohomology import (OHElem, REllElem, dot_e, oh_from_osym, oh_from_rell, oh_from_schur,
                               oh_one, psi_iso, rank_parameter)
from .linalg import solve_combination
from .onh import OPolElem, ONHWord, onh_apply, opol_mul, osym_to_opol, right_action, sym_basis
from .qpi_scalars import GPScalar, q_power

logger = logging.getLogger(__name__)

KINDS = ('V', 'U')
SIDES = ('rho', 'lambda')
REDUCTION_METHODS = ('recursion', 'series', 'polynomial')

_FAMILIES = {
    'eps': osym.eps,
    'eta': osym.eta,
    'e': osym.e_elem,
    'h': osym.h,
}


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _check_rank_one(n, ell):
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"ell must be a positive integer, got {ell!r}")
    if not isinstance(n, int) or not 0 <= n < ell:
        raise ValueError(f"n must satisfy 0 <= n < ell = {ell}, got {n!r}")


def _check_index(q, label='index'):
    if not isinstance(q, int) or q < 0:
        raise ValueError(f"The {label} must be a nonnegative integer, got {q!r}")


def dual_index(n, ell):
    """n' = ell - n - 1"""
    return ell - n - 1


# Koszul signs

def koszul_sign(first, second):
    """Sign picked up when something of parity first moves past something of parity second"""
    return _sign(first * second)


def twist(a, exponent):
    """Multiply every homogeneous piece of a by (-1)^{exponent * parity}"""
    if exponent % 2 == 0:
        return a
    result = OHElem(a.n, a.ell)
    result.coeffs = {(lam, rkey): c * _sign(size(lam) + rkey[1]) for (lam, rkey), c in a.coeffs.items()}
    return result


def left_shift(kind, n, ell, tilde=False):
    """Exponent k with (left action) = (-1)^{k par(a)} (unshifted left action)"""
    if kind == 'V':
        return 0 if tilde else n
    return dual_index(n, ell) if tilde else 0


def basis_grading(kind, n, ell, q, tilde=False):
    """(degree, parity) of v_n(x^q) or u_n(x^q)"""
    shift = left_shift(kind, n, ell, tilde)
    return 2 * q - 2 * shift, (q + shift) % 2


def _r_pieces(r, ell):
    """Even and odd parts of an R_ell element as (parity, REllElem)"""
    pieces = []
    for parity, part in ((0, r.even_part), (1, r.odd_part)):
        if part:
            pieces.append((parity, REllElem(ell, {(gexp, parity): c for gexp, c in part.items()})))
    return pieces


@lru_cache(maxsize=None)
def _bar(family, r, n, ell):
    if r < 0:
        return OHElem(n, ell)
    return oh_from_osym(_FAMILIES[family](r), n, ell)


def bar_generator(family, r, n, ell):
    """
    x_r (x) 1 in OH_n^ell

    Args:
        family: 'eps', 'eta', 'e' or 'h'
        r: Index, zero element for r < 0
    """
    if family not in _FAMILIES:
        raise ValueError(f"Unknown family {family!r}, expected one of {sorted(_FAMILIES)}")
    return _bar(family, r, n, ell)


def oh_generators(n, ell):
    """
    Algebra generators of OH_n^ell: eps_r (x) 1 for 1 <= r <= n together with
    the generators c, g_1, ..., g_m of R_ell

    Returns:
        List of (label, OHElem)
    """
    gens = [(f"eps{r}", _bar('eps', r, n, ell)) for r in range(1, n + 1)]
    gens.append(('c', oh_from_rell(REllElem.c(ell), n)))
    for r in range(1, rank_parameter(ell) + 1):
        gens.append((f"g{r}", oh_from_rell(REllElem.g(r, ell), n)))
    return [(label, a) for label, a in gens if a]


# Partially symmetric odd polynomials

def _variable_power(i, k, nvars):
    kappa = [0] * nvars
    kappa[i - 1] = k
    return OPolElem.monomial(kappa)


def _embed(f, nvars):
    """OPol_m -> OPol_nvars on the first m variables"""
    pad = (0,) * (nvars - f.n)
    return OPolElem(nvars, {kappa + pad: c for kappa, c in f.coeffs.items()})


def _shift(f):
    """x_i -> x_{i+1}"""
    return OPolElem(f.n + 1, {(0,) + kappa: c for kappa, c in f.coeffs.items()})


@lru_cache(maxsize=None)
def _split_columns(nvars, half_degree, layout):
    """
    A basis of one degree of a partially symmetric subalgebra of OPol_N

    'last':  x_N^q e_lam with q < N, spanning OSym_(N-1,1)
    'first': e_lam x_1^q with q < N, spanning OSym_(1,N-1)
    'free':  x_1^p sigma_1(e_lam) with e_lam in N-1 variables, spanning OSym_(1,N-1)
    """
    labels, columns = [], []
    if layout == 'free':
        for p in range(half_degree + 1):
            for lam, e_lam in sym_basis(nvars - 1, half_degree - p):
                labels.append((p, lam))
                columns.append(opol_mul(_variable_power(1, p, nvars), _shift(e_lam)).coeffs)
        return tuple(labels), tuple(columns)
    for q in range(min(nvars - 1, half_degree) + 1):
        power = _variable_power(nvars if layout == 'last' else 1, q, nvars)
        for lam, e_lam in sym_basis(nvars, half_degree - q):
            labels.append((q, lam))
            product = opol_mul(power, e_lam) if layout == 'last' else opol_mul(e_lam, power)
            columns.append(product.coeffs)
    return tuple(labels), tuple(columns)


def _split(f, layout):
    """
    Coefficients of f against the basis of _split_columns

    Returns:
        Dictionary index -> OSymElem
    """
    pieces = {}
    for d in sorted(f.half_degrees()):
        labels, columns = _split_columns(f.n, d, layout)
        solution = solve_combination(list(columns), f.component(d).coeffs)
        if solution is None:
            raise InternalError(f"{f} is not partially symmetric in the '{layout}' layout")
        for (q, lam), c in zip(labels, solution):
            if c:
                pieces.setdefault(q, {})
                pieces[q][lam] = pieces[q].get(lam, 0) + c
    return {q: osym.from_e_basis(coeffs) for q, coeffs in pieces.items()}


def _v_poly_action(poly, r, n, ell):
    """Unshifted f . v_n(x^r) for f in OPol_n, as right-basis coefficients"""
    f = opol_mul(_embed(poly, n + 1), _variable_power(n + 1, r, n + 1))
    pieces = _split(f, 'last')
    return tuple(oh_from_osym(pieces.get(q, osym.OSymElem()), n + 1, ell) for q in range(n + 1))


def _u_poly_action(poly, s, n, ell):
    """u_n(x^s) . f for f in OPol_n homogeneous, as left-basis coefficients"""
    degrees = poly.half_degrees()
    if not degrees:
        return tuple(OHElem(n + 1, ell) for _ in range(n + 1))
    if len(degrees) > 1:
        raise InternalError(f"Expected a homogeneous polynomial, got {poly}")
    f = opol_mul(_variable_power(1, s, n + 1), _shift(poly))
    pieces = _split(f, 'first')
    sign = _sign(degrees.pop())
    return tuple(oh_from_osym(pieces.get(q, osym.OSymElem()), n + 1, ell).scale(sign) for q in range(n + 1))


@lru_cache(maxsize=None)
def _v_schur_action(lam, r, n, ell):
    return _v_poly_action(osym_to_opol(osym.schur(lam), n), r, n, ell)


@lru_cache(maxsize=None)
def _u_schur_action(lam, s, n, ell):
    return _u_poly_action(osym_to_opol(osym.schur(lam), n), s, n, ell)


# Truncated generating functions

class TruncSeries:
    """
    Power series in t with coefficients in OH_n^ell, known on a window

    Coefficients below lo vanish. Coefficients above hi are unknown, except
    when hi is None, in which case the series is a polynomial.
    """

    __slots__ = ('n', 'ell', 'lo', 'hi', 'coeffs')

    def __init__(self, n, ell, coeffs=None, lo=0, hi=None):
        self.n = n
        self.ell = ell
        self.lo = lo
        self.hi = hi
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            if k < lo or (hi is not None and k > hi):
                raise ValueError(f"Exponent {k} lies outside the window [{lo}, {hi}]")
            if c:
                self.coeffs[k] = c

    @classmethod
    def family(cls, family, n, ell, hi, sign=1):
        """sum_{j=0}^{hi} sign^j x_j t^j, known through t^hi"""
        coeffs = {j: bar_generator(family, j, n, ell).scale(sign ** j) for j in range(hi + 1)}
        return cls(n, ell, coeffs, 0, hi)

    def coefficient(self, k):
        if self.hi is not None and k > self.hi:
            raise InternalError(f"Coefficient of t^{k} requested beyond the window ending at t^{self.hi}")
        return self.coeffs.get(k, OHElem(self.n, self.ell))

    def truncate(self, p):
        """[.]_{<= t^p}, a polynomial"""
        if self.hi is not None and p > self.hi:
            raise InternalError(f"Truncation at t^{p} needs coefficients beyond t^{self.hi}")
        return TruncSeries(self.n, self.ell, {k: c for k, c in self.coeffs.items() if k <= p}, self.lo, None)

    def tail(self, p):
        """[.]_{> t^p}"""
        return TruncSeries(self.n, self.ell, {k: c for k, c in self.coeffs.items() if k > p}, self.lo, self.hi)

    @staticmethod
    def _min_hi(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        hi = self._min_hi(self.hi, other.hi)
        coeffs = {}
        for source in (self.coeffs, other.coeffs):
            for k, c in source.items():
                if hi is None or k <= hi:
                    coeffs[k] = coeffs[k] + c if k in coeffs else c
        return TruncSeries(self.n, self.ell, coeffs, min(self.lo, other.lo), hi)

    def __mul__(self, other):
        lo = self.lo + other.lo
        hi = self._min_hi(None if self.hi is None else self.hi + other.lo,
                          None if other.hi is None else other.hi + self.lo)
        coeffs = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if hi is not None and i + j > hi:
                    continue
                product = a * b
                if product:
                    coeffs[i + j] = coeffs[i + j] + product if i + j in coeffs else product
        return TruncSeries(self.n, self.ell, coeffs, lo, hi)


# Vectors

class BimodVec:
    """
    Vector of V_n^ell (kind 'V') or U_n^ell (kind 'U')

    Attributes:
        kind: 'V' or 'U'
        n, ell: The bimodule indices, 0 <= n < ell
        tilde: True for the tilde bimodules
        coeffs: n+1 OHElem values over OH_{n+1}^ell; sum_r v_n(x^r) c_r for
            kind 'V' and sum_s c_s u_n(x^s) for kind 'U'
    """

    __slots__ = ('kind', 'n', 'ell', 'tilde', 'coeffs')

    def __init__(self, kind, n, ell, coeffs=None, tilde=False):
        if kind not in KINDS:
            raise ValueError(f"Kind must be one of {KINDS}, got {kind!r}")
        _check_rank_one(n, ell)
        self.kind = kind
        self.n = n
        self.ell = ell
        self.tilde = bool(tilde)
        if coeffs is None:
            coeffs = [OHElem(n + 1, ell) for _ in range(n + 1)]
        coeffs = list(coeffs)
        if len(coeffs) != n + 1:
            raise ValueError(f"A vector of {kind}_{n} needs {n + 1} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if not isinstance(c, OHElem) or (c.n, c.ell) != (n + 1, ell):
                raise ValueError(f"Coefficients must lie in OH_{n + 1}^{ell}, got {c!r}")
        self.coeffs = coeffs

    @classmethod
    def basis(cls, kind, n, ell, q, tilde=False):
        """v_n(x^q) or u_n(x^q), reduced to the free basis when q > n"""
        _check_index(q, 'exponent')
        _check_rank_one(n, ell)
        if q > n:
            if kind == 'V':
                return v_reduce(n, ell, q, tilde=tilde)
            return u_reduce(n, ell, q, tilde=tilde)
        vec = cls(kind, n, ell, tilde=tilde)
        vec.coeffs[q] = oh_one(n + 1, ell)
        return vec

    @property
    def n_prime(self):
        return dual_index(self.n, self.ell)

    def grading(self, q):
        return basis_grading(self.kind, self.n, self.ell, q, self.tilde)

    def _check_same(self, other):
        if not isinstance(other, BimodVec):
            raise TypeError(f"Expected a BimodVec, got {other!r}")
        if (other.kind, other.n, other.ell, other.tilde) != (self.kind, self.n, self.ell, self.tilde):
            raise ValueError("Vectors must lie in the same bimodule")

    def _with(self, coeffs):
        return BimodVec(self.kind, self.n, self.ell, coeffs, self.tilde)

    def __add__(self, other):
        self._check_same(other)
        return self._with([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check_same(other)
        return self._with([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return self._with([a.scale(c) for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, BimodVec):
            return NotImplemented
        return ((self.kind, self.n, self.ell, self.tilde, self.coeffs)
                == (other.kind, other.n, other.ell, other.tilde, other.coeffs))

    def __hash__(self):
        return hash((self.kind, self.n, self.ell, self.tilde, tuple(self.coeffs)))

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self):
        return not any(self.coeffs)

    def to_json(self):
        return {
            'kind': self.kind,
            'n': self.n,
            'ell': self.ell,
            'tilde': self.tilde,
            'coeffs': [c.to_json() for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        try:
            coeffs = [OHElem.from_json(c) for c in data['coeffs']]
            return cls(data['kind'], data['n'], data['ell'], coeffs, data.get('tilde', False))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid bimodule vector JSON: {data!r}") from e

    def __str__(self):
        letter = self.kind.lower() + ('~' if self.tilde else '')
        pieces = []
        for q, c in enumerate(self.coeffs):
            if not c:
                continue
            if self.kind == 'V':
                pieces.append(f"{letter}(x^{q})*[{c}]")
            else:
                pieces.append(f"[{c}]*{letter}(x^{q})")
        return ' + '.join(pieces) if pieces else '0'

    def __repr__(self):
        return f"BimodVec({self.kind}, {self.n}, {self.ell}, {self})"


# Reductions v_n(x^p), u_n(x^p)

def _check_method(method):
    if method not in REDUCTION_METHODS:
        raise ValueError(f"Method must be one of {REDUCTION_METHODS}, got {method!r}")


@lru_cache(maxsize=None)
def _v_reduce_raw(n, ell, p, method, margin):
    if p <= n and method != 'polynomial':
        return tuple(oh_one(n + 1, ell) if q == p else OHElem(n + 1, ell) for q in range(n + 1))
    if method == 'polynomial':
        return _v_schur_action((), p, n, ell)
    coeffs = []
    for q in range(n + 1):
        if method == 'recursion':
            total = OHElem(n + 1, ell)
            for s in range(p - n):
                j = p - q - s
                total = total - (_bar('eps', j, n + 1, ell) * _bar('eta', s, n + 1, ell)).scale(_sign(j))
        else:
            head = TruncSeries.family('eps', n + 1, ell, n - q, sign=-1).truncate(n - q)
            series = head * TruncSeries.family('eta', n + 1, ell, p - q + margin)
            total = series.coefficient(p - q)
        coeffs.append(total)
    return tuple(coeffs)


def v_reduce(n, ell, p, method='recursion', tilde=False, margin=0):
    """
    Expand v_n(x^p) in the right basis v_n(x^r), 0 <= r <= n

    Args:
        n, ell: The bimodule V_n^ell
        p: Exponent
        method: 'recursion' (the closed recursion in eps and eta), 'series'
            (coefficient extraction from [eps(-t)]_{<= t^{n-q}} eta(t)) or
            'polynomial' (linear algebra in odd polynomials)
        tilde: Reduce in the tilde bimodule; right coefficients agree
        margin: Extra window for the series route

    Returns:
        BimodVec
    """
    _check_rank_one(n, ell)
    _check_index(p, 'exponent')
    _check_method(method)
    return BimodVec('V', n, ell, _v_reduce_raw(n, ell, p, method, margin), tilde)


@lru_cache(maxsize=None)
def _u_reduce_raw(n, ell, p, method, margin):
    if p <= n and method != 'polynomial':
        return tuple(oh_one(n + 1, ell) if q == p else OHElem(n + 1, ell) for q in range(n + 1))
    if method == 'polynomial':
        return _u_schur_action((), p, n, ell)
    coeffs = []
    for q in range(n + 1):
        if method == 'recursion':
            total = OHElem(n + 1, ell)
            for r in range(p - n):
                j = p - q - r
                total = total - (_bar('eta', r, n + 1, ell) * _bar('eps', j, n + 1, ell)).scale(_sign(j))
        else:
            tail = TruncSeries.family('eps', n + 1, ell, n - q, sign=-1).truncate(n - q)
            series = TruncSeries.family('eta', n + 1, ell, p - q + margin) * tail
            total = series.coefficient(p - q)
        coeffs.append(total)
    return tuple(coeffs)


def u_reduce(n, ell, p, method='recursion', tilde=False, margin=0):
    """
    Expand u_n(x^p) in the left basis u_n(x^s), 0 <= s <= n

    The methods mirror v_reduce. In the tilde bimodule the coefficients are
    twisted by (-1)^{n' par}.
    """
    _check_rank_one(n, ell)
    _check_index(p, 'exponent')
    _check_method(method)
    coeffs = _u_reduce_raw(n, ell, p, method, margin)
    if tilde:
        coeffs = [twist(c, dual_index(n, ell)) for c in coeffs]
    return BimodVec('U', n, ell, coeffs, tilde)


# Actions

def _zeros(n, ell):
    return [OHElem(n + 1, ell) for _ in range(n + 1)]


def _v_raw_left(a, coeffs, n, ell):
    """a . sum_r v(x^r) c_r with a in OH_n, unshifted"""
    result = _zeros(n, ell)
    for lam, r_elem in a.by_partition().items():
        moved = _zeros(n, ell)
        for j, c in enumerate(coeffs):
            if not c:
                continue
            for parity, part in _r_pieces(r_elem, ell):
                moved[j] = moved[j] + (oh_from_rell(part, n + 1) * c).scale(koszul_sign(parity, j))
        for j, c in enumerate(moved):
            if not c:
                continue
            for q, a_q in enumerate(_v_schur_action(lam, j, n, ell)):
                if a_q:
                    result[q] = result[q] + a_q * c
    return result


def _u_raw_right(coeffs, b, n, ell):
    """sum_s c_s u(x^s) . b with b in OH_n, unshifted"""
    result = _zeros(n, ell)
    for lam, r_elem in b.by_partition().items():
        stage = _zeros(n, ell)
        for s, c in enumerate(coeffs):
            if not c:
                continue
            for q, a_q in enumerate(_u_schur_action(lam, s, n, ell)):
                if a_q:
                    stage[q] = stage[q] + c * a_q
        for q, c in enumerate(stage):
            if not c:
                continue
            for parity, part in _r_pieces(r_elem, ell):
                result[q] = result[q] + (c * oh_from_rell(part, n + 1)).scale(koszul_sign(parity, q))
    return result


def _check_vector(vec, kind):
    if not isinstance(vec, BimodVec) or vec.kind != kind:
        raise ValueError(f"Expected a vector of {kind}, got {vec!r}")


def _check_algebra(a, n, ell):
    if not isinstance(a, OHElem) or (a.n, a.ell) != (n, ell):
        raise ValueError(f"Expected an element of OH_{n}^{ell}, got {a!r}")


def v_left_mul(a, vec):
    """
    Left action of a in OH_n^ell on a vector of V_n^ell

    Schur parts act through odd polynomials and R_ell acts supercentrally:
    r . v(x^j) = (-1)^{par(r) j} v(x^j) r before the shift.
    """
    _check_vector(vec, 'V')
    _check_algebra(a, vec.n, vec.ell)
    shifted = twist(a, left_shift('V', vec.n, vec.ell, vec.tilde))
    return vec._with(_v_raw_left(shifted, vec.coeffs, vec.n, vec.ell))


def v_right_mul(vec, b):
    _check_vector(vec, 'V')
    _check_algebra(b, vec.n + 1, vec.ell)
    return vec._with([c * b for c in vec.coeffs])


def u_left_mul(a, vec):
    _check_vector(vec, 'U')
    _check_algebra(a, vec.n + 1, vec.ell)
    return vec._with([a * c for c in vec.coeffs])


def u_right_mul(vec, b):
    """
    Right action of b in OH_n^ell on a vector of U_n^ell

    u(x^s) . a = (-1)^{par a} sum_q a'_q u(x^q) for a in OSym_n, where
    x_1^s sigma_1(a) = sum_q a'_q x_1^q; R_ell acts supercentrally.
    """
    _check_vector(vec, 'U')
    _check_algebra(b, vec.n, vec.ell)
    shift = left_shift('U', vec.n, vec.ell, vec.tilde)
    raw = [twist(c, shift) for c in vec.coeffs]
    result = _u_raw_right(raw, b, vec.n, vec.ell)
    return vec._with([twist(c, shift) for c in result])


def left_mul(a, vec):
    return v_left_mul(a, vec) if vec.kind == 'V' else u_left_mul(a, vec)


def right_mul(vec, b):
    return v_right_mul(vec, b) if vec.kind == 'V' else u_right_mul(vec, b)


def v_left_osym(x, vec):
    """Left action of x in OSym through pi_n, without passing through OH_n normal form"""
    _check_vector(vec, 'V')
    n, ell = vec.n, vec.ell
    poly = osym_to_opol(x, n)
    shift = left_shift('V', n, ell, vec.tilde)
    result = _zeros(n, ell)
    for d in poly.half_degrees():
        component = poly.component(d)
        for j, c in enumerate(vec.coeffs):
            if not c:
                continue
            for q, a_q in enumerate(_v_poly_action(component, j, n, ell)):
                if a_q:
                    result[q] = result[q] + (a_q * c).scale(_sign(shift * d))
    return vec._with(result)


def u_right_osym(vec, x):
    """Right action of x in OSym through pi_n, without passing through OH_n normal form"""
    _check_vector(vec, 'U')
    n, ell = vec.n, vec.ell
    poly = osym_to_opol(x, n)
    shift = left_shift('U', n, ell, vec.tilde)
    raw = [twist(c, shift) for c in vec.coeffs]
    result = _zeros(n, ell)
    for d in poly.half_degrees():
        component = poly.component(d)
        for s, c in enumerate(raw):
            if not c:
                continue
            for q, a_q in enumerate(_u_poly_action(component, s, n, ell)):
                if a_q:
                    result[q] = result[q] + c * a_q
    return vec._with([twist(c, shift) for c in result])


def schur_action_defect(n, ell, max_half_degree):
    """
    Compare the action of s_lambda computed from odd polynomials with the
    action of its OH_n normal form, for every lambda with at most n rows

    Returns:
        None, or a witness string
    """
    for d in range(max_half_degree + 1):
        for lam in partitions_of(d):
            if len(lam) > n:
                continue
            x = osym.schur(lam)
            a = oh_from_schur(lam, n, ell)
            for q in range(n + 1):
                v = BimodVec.basis('V', n, ell, q)
                if v_left_osym(x, v) != v_left_mul(a, v):
                    return f"s{list(lam)} . v(x^{q}) differs between the two routes"
                u = BimodVec.basis('U', n, ell, q)
                if u_right_osym(u, x) != u_right_mul(u, a):
                    return f"u(x^{q}) . s{list(lam)} differs between the two routes"
    return None


# V (x) U

class VUTensor:
    """
    Element sum v_n(x^r) c_{rs} (x) u_n(x^s) of V_n^ell (x)_{OH_{n+1}} U_n^ell

    Stored as {(r, s): c_rs} with c_rs in OH_{n+1}^ell, a normal form since
    V is right free and U is left free over OH_{n+1}^ell.
    """

    __slots__ = ('n', 'ell', 'coeffs')

    def __init__(self, n, ell, coeffs=None):
        _check_rank_one(n, ell)
        self.n = n
        self.ell = ell
        self.coeffs = {}
        for (r, s), c in (coeffs or {}).items():
            self.add_term(r, s, c)

    def add_term(self, r, s, c):
        if not (0 <= r <= self.n and 0 <= s <= self.n):
            raise ValueError(f"Index pair {(r, s)} is outside the basis of V_{self.n} (x) U_{self.n}")
        _check_algebra(c, self.n + 1, self.ell)
        if not c:
            return
        total = self.coeffs[(r, s)] + c if (r, s) in self.coeffs else c
        if total:
            self.coeffs[(r, s)] = total
        else:
            self.coeffs.pop((r, s), None)

    def add_v_times_u(self, v_vec, s):
        """Add v_vec (x) u(x^s)"""
        for r, c in enumerate(v_vec.coeffs):
            self.add_term(r, s, c)

    def add_v_times_uvec(self, r, c, u_vec):
        """Add v(x^r) c (x) u_vec"""
        for s, b in enumerate(u_vec.coeffs):
            if b:
                self.add_term(r, s, c * b)

    def __add__(self, other):
        result = VUTensor(self.n, self.ell, self.coeffs)
        for (r, s), c in other.coeffs.items():
            result.add_term(r, s, c)
        return result

    def __eq__(self, other):
        if not isinstance(other, VUTensor):
            return NotImplemented
        return (self.n, self.ell, self.coeffs) == (other.n, other.ell, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.ell, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def to_json(self):
        return {
            'n': self.n,
            'ell': self.ell,
            'terms': [{'r': r, 's': s, 'coeff': c.to_json()} for (r, s), c in sorted(self.coeffs.items())],
        }

    def __str__(self):
        pieces = [f"v(x^{r})[{c}](x)u(x^{s})" for (r, s), c in sorted(self.coeffs.items())]
        return ' + '.join(pieces) if pieces else '0'

    def __repr__(self):
        return f"VUTensor({self.n}, {self.ell}, {self})"


# The first adjunction

def ev(n, ell, r, s):
    """ev_n(u_n(x^r) (x) v_n(x^s)) = eta_{r+s-n} (x) 1 in OH_{n+1}^ell, zero when r + s < n"""
    _check_rank_one(n, ell)
    _check_index(r)
    _check_index(s)
    return _bar('eta', r + s - n, n + 1, ell)


def ev_pair(u_vec, v_vec):
    """ev on u_vec (x) v_vec, extended bilinearly"""
    _check_vector(u_vec, 'U')
    _check_vector(v_vec, 'V')
    n, ell = u_vec.n, u_vec.ell
    total = OHElem(n + 1, ell)
    for s, c in enumerate(u_vec.coeffs):
        if not c:
            continue
        for r, b in enumerate(v_vec.coeffs):
            if b:
                total = total + c * ev(n, ell, s, r) * b
    return total


def coev(n, ell):
    """coev_n(1) = sum_{r+s <= n} (-1)^{n-r-s} v(x^r) eps_{n-r-s} (x) u(x^s)"""
    _check_rank_one(n, ell)
    result = VUTensor(n, ell)
    for r in range(n + 1):
        for s in range(n + 1 - r):
            j = n - r - s
            result.add_term(r, s, _bar('eps', j, n + 1, ell).scale(_sign(j)))
    return result


def coev_collapsed(n, ell, form):
    """
    The two collapsed expressions for coev_n(1)

    'right': sum_r v(x^r) (x) u(1) eps^{(n)}_{n-r}
    'left':  sum_s (-1)^{(n+1)s} eps^{(n)}_{n-s} v(1) (x) u(x^s)
    """
    _check_rank_one(n, ell)
    result = VUTensor(n, ell)
    if form == 'right':
        for r in range(n + 1):
            moved = u_right_mul(BimodVec.basis('U', n, ell, 0), _bar('eps', n - r, n, ell))
            result.add_v_times_uvec(r, oh_one(n + 1, ell), moved)
    elif form == 'left':
        for s in range(n + 1):
            moved = v_left_mul(_bar('eps', n - s, n, ell), BimodVec.basis('V', n, ell, 0))
            result.add_v_times_u(moved.scale(_sign((n + 1) * s)), s)
    else:
        raise ValueError(f"Form must be 'right' or 'left', got {form!r}")
    return result


def zigzag_defect(n, ell):
    """
    Both zigzag identities on the basis vectors

    Returns:
        None, or a witness string
    """
    unit = coev(n, ell)
    for t in range(n + 1):
        total = BimodVec('U', n, ell)
        for (r, q), c in unit.coeffs.items():
            total = total + u_left_mul(ev(n, ell, t, r) * c, BimodVec.basis('U', n, ell, q))
        if total != BimodVec.basis('U', n, ell, t):
            return f"U-zigzag fails on u(x^{t}) for n={n}, ell={ell}"
        total = BimodVec('V', n, ell)
        for (r, q), c in unit.coeffs.items():
            total = total + v_right_mul(BimodVec.basis('V', n, ell, r), c * ev(n, ell, q, t))
        if total != BimodVec.basis('V', n, ell, t):
            return f"V-zigzag fails on v(x^{t}) for n={n}, ell={ell}"
    return None


def ev_balanced_defect(n, ell):
    """ev(u . a (x) v) = ev(u (x) a . v) for generators a of OH_n^ell"""
    for label, a in oh_generators(n, ell):
        for s in range(n + 1):
            u = BimodVec.basis('U', n, ell, s)
            for r in range(n + 1):
                v = BimodVec.basis('V', n, ell, r)
                if ev_pair(u_right_mul(u, a), v) != ev_pair(u, v_left_mul(a, v)):
                    return f"ev is not balanced for {label} on u(x^{s}) (x) v(x^{r})"
    return None


def coev_centrality_defect(n, ell):
    """a . coev(1) = coev(1) . a for generators a of OH_n^ell"""
    unit = coev(n, ell)
    for label, a in oh_generators(n, ell):
        left, right = VUTensor(n, ell), VUTensor(n, ell)
        for (r, s), c in unit.coeffs.items():
            left.add_v_times_u(v_right_mul(v_left_mul(a, BimodVec.basis('V', n, ell, r)), c), s)
            right.add_v_times_uvec(r, c, u_right_mul(BimodVec.basis('U', n, ell, s), a))
        if left != right:
            return f"coev(1) does not commute with {label} for n={n}, ell={ell}"
    return None


# The second adjunction

@lru_cache(maxsize=None)
def tilde_ev(n, ell, r, s):
    """
    The counit on v~(x^r) (x) u~(x^s), valued in OH_n^ell

    Zero when r + s < n'; the sign (-1)^{n(r+s) + binom(r,2) + binom(s+1,2)}
    when r + s = n'; otherwise that sign times the inverse of psi applied to
    eta_{r+s-n'} + (-1)^{n+1} (1 - (-1)^s) eta_{r+s-n'-1} o-dot in OH_{n'+1}^ell.
    """
    _check_rank_one(n, ell)
    _check_index(r)
    _check_index(s)
    n_prime = dual_index(n, ell)
    total = r + s
    if total < n_prime:
        return OHElem(n, ell)
    sign = _sign(n * total + binom2(r) + binom2(s + 1))
    if total == n_prime:
        return oh_one(n, ell).scale(sign)
    inner = _bar('eta', total - n_prime, n_prime + 1, ell)
    if s % 2:
        o_dot = oh_from_rell(dot_e(1, ell), n_prime + 1)
        inner = inner + (_bar('eta', total - n_prime - 1, n_prime + 1, ell) * o_dot).scale(2 * _sign(n + 1))
    return psi_iso(inner, 'inverse').scale(sign)


@lru_cache(maxsize=None)
def _tilde_coev(n, ell):
    n_prime = dual_index(n, ell)
    terms = []
    for s in range(n_prime + 1):
        c = psi_iso(_bar('eps', n_prime - s, n_prime, ell), 'inverse').scale(_sign(ell * s + binom2(s)))
        terms.append((s, c))
    return tuple(terms)


def tilde_coev(n, ell):
    """
    The unit: sum_s c_s u~(1) (x) v~(x^s)

    Returns:
        Dictionary s -> c_s in OH_{n+1}^ell
    """
    _check_rank_one(n, ell)
    return {s: c for s, c in _tilde_coev(n, ell) if c}


@lru_cache(maxsize=None)
def _schur_on_u_one(lam, n, ell):
    """s_lam . u(1) = sum_p u(x^p) b_p with unbounded p, unshifted"""
    pieces = _split(osym_to_opol(osym.schur(lam), n + 1), 'free')
    return tuple((p, oh_from_osym(b, n, ell).scale(_sign(size(lam) + p))) for p, b in sorted(pieces.items()))


def tilde_right_form(c, n, ell):
    """
    Write c . u~(1) as sum_p u~(x^p) . b_p

    Args:
        c: Element of OH_{n+1}^ell

    Returns:
        Dictionary p -> b_p in OH_n^ell
    """
    _check_algebra(c, n + 1, ell)
    raw = twist(c, dual_index(n, ell))
    result = {}
    for lam, r_elem in raw.by_partition().items():
        r_oh = oh_from_rell(r_elem, n)
        for p, b in _schur_on_u_one(lam, n, ell):
            term = b * r_oh
            if term:
                total = result[p] + term if p in result else term
                if total:
                    result[p] = total
                else:
                    result.pop(p, None)
    return result


def tilde_zigzag_defect(n, ell):
    """
    Both zigzag identities for the tilde pair

    Returns:
        None, or a witness string
    """
    unit = tilde_coev(n, ell)
    for t in range(n + 1):
        total = BimodVec('V', n, ell, tilde=True)
        for s, c in unit.items():
            for p, b in tilde_right_form(c, n, ell).items():
                value = tilde_ev(n, ell, t, p) * b
                if value:
                    total = total + v_left_mul(value, BimodVec.basis('V', n, ell, s, tilde=True))
        if total != BimodVec.basis('V', n, ell, t, tilde=True):
            return f"tilde V-zigzag fails on v~(x^{t}) for n={n}, ell={ell}"
        total = BimodVec('U', n, ell, tilde=True)
        for s, c in unit.items():
            value = tilde_ev(n, ell, s, t)
            if value:
                moved = u_right_mul(BimodVec.basis('U', n, ell, 0, tilde=True), value)
                total = total + u_left_mul(c, moved)
        if total != BimodVec.basis('U', n, ell, t, tilde=True):
            return f"tilde U-zigzag fails on u~(x^{t}) for n={n}, ell={ell}"
    return None


# The crossing

def sigma(n, ell, r, s):
    """
    The crossing on u_{n-1}(x^r) (x) v_{n-1}(x^s), valued in V_n (x) U_n

    Args:
        n: 1 <= n < ell
        r: Any nonnegative exponent
        s: 0 <= s <= n - 1

    Returns:
        VUTensor
    """
    _check_rank_one(n, ell)
    if n < 1:
        raise ValueError("The crossing needs n >= 1")
    _check_index(r)
    if not isinstance(s, int) or not 0 <= s <= n - 1:
        raise ValueError(f"s must satisfy 0 <= s <= {n - 1}, got {s!r}")
    result = VUTensor(n, ell)
    first = BimodVec.basis('U', n, ell, r)
    sign = _sign(n * r + r * s + r + s + n + 1)
    result.add_v_times_uvec(s, oh_one(n + 1, ell).scale(sign), first)
    for p in range(n + 1):
        for q in range(r + s - n + 1):
            coeff = _bar('eps', n - p, n, ell) * _bar('eta', r + s - n - q, n, ell)
            if not coeff:
                continue
            moved = u_right_mul(BimodVec.basis('U', n, ell, q), coeff)
            result.add_v_times_uvec(p, oh_one(n + 1, ell).scale(_sign(n * q + p * q + r * q + r + q)), moved)
    return result


# Tensor powers

class TensorChain:
    """
    A pure tensor power of rank-one bimodules

    Kind 'U' is U_{n+d-1} (x) ... (x) U_n with basis
    [kappa] = u_{n+d-1}(x^{kappa_d}) (x) ... (x) u_n(x^{kappa_1}) and
    coefficients in OH_{n+d}^ell on the left. Kind 'V' is
    V_n (x) ... (x) V_{n+d-1} with [kappa] = v_n(x^{kappa_1}) (x) ... (x) v_{n+d-1}(x^{kappa_d})
    and coefficients on the right. In normal form kappa_i <= n + i - 1.
    """

    __slots__ = ('kind', 'n', 'ell', 'd', 'coeffs')

    def __init__(self, kind, n, ell, d, coeffs=None):
        if kind not in KINDS:
            raise ValueError(f"Kind must be one of {KINDS}, got {kind!r}")
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"Chain length must be a positive integer, got {d!r}")
        _check_rank_one(n, ell)
        if n + d > ell:
            raise ValueError(f"A chain of length {d} starting at {n} needs n + d <= ell = {ell}")
        self.kind = kind
        self.n = n
        self.ell = ell
        self.d = d
        self.coeffs = {}
        for kappa, c in (coeffs or {}).items():
            self._accumulate(tuple(kappa), c)

    @property
    def outer(self):
        return self.n + self.d

    def _accumulate(self, kappa, c):
        if len(kappa) != self.d or any(not 0 <= k <= self.n + i for i, k in enumerate(kappa)):
            raise ValueError(f"{list(kappa)} is not a normal-form index of the chain")
        _check_algebra(c, self.outer, self.ell)
        if not c:
            return
        total = self.coeffs[kappa] + c if kappa in self.coeffs else c
        if total:
            self.coeffs[kappa] = total
        else:
            self.coeffs.pop(kappa, None)

    @classmethod
    def basis(cls, kind, n, ell, kappa):
        """The chain [kappa] for arbitrary exponents, brought to normal form"""
        kappa = tuple(kappa)
        chain = cls(kind, n, ell, len(kappa))
        reduced = _u_chain_reduce(kappa, n, ell) if kind == 'U' else _v_chain_reduce(kappa, n, ell)
        for key, c in reduced:
            chain._accumulate(key, c)
        return chain

    def _check_same(self, other):
        if not isinstance(other, TensorChain):
            raise TypeError(f"Expected a TensorChain, got {other!r}")
        if (other.kind, other.n, other.ell, other.d) != (self.kind, self.n, self.ell, self.d):
            raise ValueError("Chains must lie in the same tensor power")

    def __add__(self, other):
        self._check_same(other)
        result = TensorChain(self.kind, self.n, self.ell, self.d, self.coeffs)
        for kappa, c in other.coeffs.items():
            result._accumulate(kappa, c)
        return result

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TensorChain(self.kind, self.n, self.ell, self.d,
                           {kappa: v.scale(c) for kappa, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorChain):
            return NotImplemented
        return ((self.kind, self.n, self.ell, self.d, self.coeffs)
                == (other.kind, other.n, other.ell, other.d, other.coeffs))

    def __hash__(self):
        return hash((self.kind, self.n, self.ell, self.d, frozenset(self.coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def to_json(self):
        return {
            'kind': self.kind,
            'n': self.n,
            'ell': self.ell,
            'd': self.d,
            'terms': [{'kappa': list(k), 'coeff': c.to_json()} for k, c in sorted(self.coeffs.items())],
        }

    def __str__(self):
        pieces = [f"[{c}]{list(k)}" for k, c in sorted(self.coeffs.items())]
        return ' + '.join(pieces) if pieces else '0'

    def __repr__(self):
        return f"TensorChain({self.kind}, {self.n}, {self.ell}, {self.d}, {self})"


def _add_into(target, key, c):
    if not c:
        return
    total = target[key] + c if key in target else c
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _u_chain_right_mul(chain, a, start, ell):
    """chain . a for a chain of U's ending at U_start and a in OH_start"""
    result = {}
    for key, c in chain.items():
        if not key:
            _add_into(result, (), c * a)
            continue
        moved = u_right_mul(BimodVec.basis('U', start, ell, key[0]), a)
        for j, a2 in enumerate(moved.coeffs):
            if a2:
                for k2, c2 in _u_chain_right_mul({key[1:]: c}, a2, start + 1, ell).items():
                    _add_into(result, (j,) + k2, c2)
    return result


@lru_cache(maxsize=None)
def _u_chain_reduce(kappa, n, ell):
    if not kappa:
        return (((), oh_one(n, ell)),)
    tail = u_reduce(n, ell, kappa[0])
    rest = dict(_u_chain_reduce(kappa[1:], n + 1, ell))
    total = {}
    for j, a in enumerate(tail.coeffs):
        if a:
            for key, c in _u_chain_right_mul(rest, a, n + 1, ell).items():
                _add_into(total, (j,) + key, c)
    return tuple(total.items())


def _v_chain_left_mul(a, chain, start, ell):
    """a . chain for a chain of V's starting at V_start and a in OH_start"""
    result = {}
    for key, c in chain.items():
        if not key:
            _add_into(result, (), a * c)
            continue
        moved = v_left_mul(a, BimodVec.basis('V', start, ell, key[0]))
        for j, a2 in enumerate(moved.coeffs):
            if a2:
                for k2, c2 in _v_chain_left_mul(a2, {key[1:]: c}, start + 1, ell).items():
                    _add_into(result, (j,) + k2, c2)
    return result


@lru_cache(maxsize=None)
def _v_chain_reduce(kappa, n, ell):
    if not kappa:
        return (((), oh_one(n, ell)),)
    head = v_reduce(n, ell, kappa[0])
    rest = dict(_v_chain_reduce(kappa[1:], n + 1, ell))
    total = {}
    for j, a in enumerate(head.coeffs):
        if a:
            for key, c in _v_chain_left_mul(a, rest, n + 1, ell).items():
                _add_into(total, (j,) + key, c)
    return tuple(total.items())


def u_chain_sign(kappa):
    """Sign of the isomorphism u_{(1^d);n}(x^kappa) -> [kappa], x^kappa in increasing variable order"""
    d = len(kappa)
    crossings = sum(kappa[i] * kappa[j] for i in range(d) for j in range(i + 1, d))
    return _sign(crossings + sum((d - i) * k for i, k in enumerate(kappa, start=1)))


def v_chain_sign(kappa, n):
    """Sign of the isomorphism v_{n;(1^d)}(x^kappa) -> [kappa]"""
    d = len(kappa)
    return _sign(sum(sharp(n + i, d - i) * k for i, k in enumerate(kappa, start=1)))


def nilhecke_on_chain(chain, word, side):
    """
    Act by an element of ONH_d on a tensor power

    Side 'rho' acts on U-chains through u(f) -> (-1)^{par(a) par(f)} u(f) . a
    and side 'lambda' acts on V-chains through v(f) -> a . v(f), transported
    along the isomorphisms with the rank-one tensor powers.

    Args:
        chain: TensorChain of kind 'U' (for 'rho') or 'V' (for 'lambda')
        word: ONHWord with word.n == chain.d

    Returns:
        TensorChain
    """
    if side not in SIDES:
        raise ValueError(f"Side must be one of {SIDES}, got {side!r}")
    expected = 'U' if side == 'rho' else 'V'
    if chain.kind != expected:
        raise ValueError(f"Side {side!r} acts on {expected}-chains, got a {chain.kind}-chain")
    if not isinstance(word, ONHWord) or word.n != chain.d:
        raise ValueError(f"Expected a word in ONH_{chain.d}, got {word!r}")
    d, n, ell = chain.d, chain.n, chain.ell
    parity = len(word.gens) % 2
    result = TensorChain(chain.kind, n, ell, d)
    for kappa, c in chain.coeffs.items():
        mono = OPolElem.monomial(kappa)
        if side == 'rho':
            image = right_action(mono, word)
            sign = u_chain_sign(kappa) * _sign(parity * sum(kappa) + (d - 1) * parity)
            outer = twist(c, parity)
        else:
            image = onh_apply(word, mono)
            sign = v_chain_sign(kappa, n) * _sign(sharp(n, d - 1) * parity)
            outer = c
        for kappa2, v in image.coeffs.items():
            factor = sign * v * (u_chain_sign(kappa2) if side == 'rho' else v_chain_sign(kappa2, n))
            for key, w in TensorChain.basis(chain.kind, n, ell, kappa2).coeffs.items():
                term = outer * w if side == 'rho' else w * outer
                result._accumulate(key, term.scale(factor))
    return result


def chain_nilhecke_defect(n, ell):
    """
    On every basis chain of length two: tau_1 applied twice is zero, and
    (xi omega)_2 = x_1 tau_1 and (omega xi)_2 = tau_1 x_1 act idempotently

    Returns:
        None, or a witness string
    """
    if n + 2 > ell:
        return None
    tau = ONHWord(2, [('t', 1)])
    idempotents = (ONHWord(2, [('x', 1), ('t', 1)]), ONHWord(2, [('t', 1), ('x', 1)]))
    for side in SIDES:
        kind = 'U' if side == 'rho' else 'V'
        for k1 in range(n + 1):
            for k2 in range(n + 2):
                chain = TensorChain.basis(kind, n, ell, (k1, k2))
                once = nilhecke_on_chain(chain, tau, side)
                if not nilhecke_on_chain(once, tau, side).is_zero():
                    return f"tau_1 twice does not kill the {kind}-chain [{k1}, {k2}] for n={n}, ell={ell}"
                for word in idempotents:
                    image = nilhecke_on_chain(chain, word, side)
                    if nilhecke_on_chain(image, word, side) != image:
                        return f"{word} is not idempotent on the {kind}-chain [{k1}, {k2}] for n={n}, ell={ell}"
    return None


def mate_defect(n, ell):
    """
    The mate of rho(x_1) under the first adjunction acts on v_n(x^t) as
    multiplication by x, for every 0 <= t <= n

    Returns:
        None, or a witness string
    """
    unit = coev(n, ell)
    x1 = ONHWord(1, [('x', 1)])
    for t in range(n + 1):
        total = BimodVec('V', n, ell)
        for (r, q), c in unit.coeffs.items():
            _, v_parity = basis_grading('V', n, ell, r)
            sign = koszul_sign(1, v_parity + c.parity())
            image = nilhecke_on_chain(TensorChain.basis('U', n, ell, (q,)), x1, 'rho')
            for (j,), w in image.coeffs.items():
                value = c * w * ev(n, ell, j, t)
                if value:
                    total = total + v_right_mul(BimodVec.basis('V', n, ell, r), value.scale(sign))
        if total != BimodVec.basis('V', n, ell, t + 1):
            return f"the mate of x_1 fails on v(x^{t}) for n={n}, ell={ell}"
    return None


# Graded ranks

def graded_rank(kind, side, n, ell, tilde=False):
    """
    Graded rank of V_n^ell or U_n^ell as a free module on one side

    V is right free on v(x^r), r <= n, and left free on v(x^j), j <= n';
    U is left free on u(x^s), s <= n, and right free on u(x^j), j <= n'.
    """
    _check_rank_one(n, ell)
    if kind not in KINDS:
        raise ValueError(f"Kind must be one of {KINDS}, got {kind!r}")
    if side not in ('left', 'right'):
        raise ValueError(f"Side must be 'left' or 'right', got {side!r}")
    own_side = 'right' if kind == 'V' else 'left'
    top = n if side == own_side else dual_index(n, ell)
    total = GPScalar()
    for q in range(top + 1):
        degree, parity = basis_grading(kind, n, ell, q, tilde)
        total = total + q_power(degree, parity)
    return total
