"""
Exact arithmetic in Z[q, q^-1]^pi and the (q, pi)-combinatorial quantities
"""

import logging
from functools import lru_cache

from sympy import Poly, symbols
from sympy.polys.domains import ZZ

from .combinatorics import all_permutations, perm_length, sharp
from .errors import InternalError

logger = logging.getLogger(__name__)

_Q = symbols('q')


class GPScalar:
    """
    Element of Z[q, q^-1][pi] / (pi^2 - 1)

    Terms are stored as {(d, p): c} meaning c * q^d * pi^p with p in {0, 1}.
    Zero coefficients are never stored.
    """

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        """
        Initialize scalar

        Args:
            terms: Mapping {(q_exponent, pi_exponent): integer}; pi exponents
                are reduced mod 2 and like terms are collected
        """
        self.terms = {}
        if terms:
            for (d, p), c in terms.items():
                self._accumulate(int(d), int(p) % 2, int(c))

    def _accumulate(self, d, p, c):
        if not c:
            return
        key = (d, p)
        total = self.terms.get(key, 0) + c
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    @classmethod
    def monomial(cls, d=0, p=0, c=1):
        """Return c * q^d * pi^p"""
        return cls({(d, p): c})

    @classmethod
    def coerce(cls, value):
        """Turn an int into a constant scalar, pass scalars through"""
        if isinstance(value, GPScalar):
            return value
        if isinstance(value, int):
            return cls({(0, 0): value}) if value else cls()
        raise TypeError(f"Cannot interpret {value!r} as a GPScalar")

    # ring structure

    def __add__(self, other):
        other = GPScalar.coerce(other)
        result = GPScalar(self.terms)
        for (d, p), c in other.terms.items():
            result._accumulate(d, p, c)
        return result

    __radd__ = __add__

    def __neg__(self):
        return GPScalar({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-GPScalar.coerce(other))

    def __rsub__(self, other):
        return GPScalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = GPScalar.coerce(other)
        result = GPScalar()
        for (d1, p1), c1 in self.terms.items():
            for (d2, p2), c2 in other.terms.items():
                result._accumulate(d1 + d2, (p1 + p2) % 2, c1 * c2)
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative powers of a GPScalar are not defined")
        result = GPScalar.coerce(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = GPScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def bar(self):
        """The involution q -> q^-1 fixing pi"""
        return GPScalar({(-d, p): c for (d, p), c in self.terms.items()})

    def scale(self, d=0, p=0, c=1):
        """Multiply by the monomial c * q^d * pi^p"""
        return GPScalar({(e + d, (r + p) % 2): c * v
                         for (e, r), v in self.terms.items()})

    def is_graded_rank(self):
        """True when every coefficient is nonnegative"""
        return all(c > 0 for c in self.terms.values())

    def dimension(self):
        """Sum of the coefficients (value at q = pi = 1)"""
        return sum(self.terms.values())

    # pi = +1 / pi = -1 splitting

    def specialize(self, sign):
        """
        Evaluate at pi = sign

        Args:
            sign: +1 or -1

        Returns:
            Laurent polynomial as a dictionary {q_exponent: integer}
        """
        if sign not in (1, -1):
            raise ValueError(f"pi can only be specialized to +1 or -1, got {sign}")
        laurent = {}
        for (d, p), c in self.terms.items():
            laurent[d] = laurent.get(d, 0) + c * (sign ** p)
        return {d: c for d, c in laurent.items() if c}

    @classmethod
    def from_specializations(cls, plus, minus):
        """
        Recombine the two specializations a(+1), a(-1) into a scalar

        The pi^0 part is (a+ + a-)/2 and the pi^1 part is (a+ - a-)/2.
        """
        terms = {}
        for d in set(plus) | set(minus):
            a, b = plus.get(d, 0), minus.get(d, 0)
            if (a + b) % 2:
                raise InternalError(f"Specializations {plus} and {minus} do not lift to Z[q,q^-1]^pi")
            terms[(d, 0)] = (a + b) // 2
            terms[(d, 1)] = (a - b) // 2
        return cls(terms)

    def exact_divide(self, other):
        """
        Divide exactly, specializing pi to both signs

        Raises:
            InternalError: if the division leaves a remainder
        """
        other = GPScalar.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero GPScalar")
        quotients = []
        for sign in (1, -1):
            num, den = self.specialize(sign), other.specialize(sign)
            if not den:
                raise InternalError(f"Divisor {other} vanishes at pi={sign}")
            quotients.append(_laurent_divide(num, den))
        return GPScalar.from_specializations(*quotients)

    # text and JSON forms

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for (d, p) in sorted(self.terms):
            c = self.terms[(d, p)]
            factors = []
            if d:
                factors.append('q' if d == 1 else f'q^{d}')
            if p:
                factors.append('pi')
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append('*'.join(factors))
            elif c == -1:
                pieces.append('-' + '*'.join(factors))
            else:
                pieces.append(f'{c}*' + '*'.join(factors))
        text = ' + '.join(pieces)
        return text.replace('+ -', '- ')

    def __repr__(self):
        return f"GPScalar({self})"

    def to_json(self):
        return [{'d': d, 'p': p, 'c': self.terms[(d, p)]} for (d, p) in sorted(self.terms)]

    @classmethod
    def from_json(cls, data):
        try:
            return cls({(item['d'], item['p']): item['c'] for item in data})
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid GPScalar JSON: {data!r}") from e


def _laurent_divide(num, den):
    """Exact division of Laurent polynomials given as {exponent: coefficient}"""
    if not num:
        return {}
    nmin, dmin = min(num), min(den)
    numerator = Poly.from_dict({(k - nmin,): c for k, c in num.items()}, _Q, domain=ZZ)
    denominator = Poly.from_dict({(k - dmin,): c for k, c in den.items()}, _Q, domain=ZZ)
    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero or quotient.get_domain() != ZZ:
        raise InternalError(f"Non-exact division of {num} by {den}")
    shift = nmin - dmin
    return {k[0] + shift: int(c) for k, c in quotient.as_dict().items() if c}


def q_power(d, p=0):
    """Shorthand for q^d pi^p"""
    return GPScalar.monomial(d, p)


def pi_q2(e):
    """(pi q^2)^e for any integer e"""
    return GPScalar.monomial(2 * e, e % 2)


def pi_q2inv(e):
    """(pi q^-2)^e for any integer e"""
    return GPScalar.monomial(-2 * e, e % 2)


@lru_cache(maxsize=None)
def qp_int(n):
    """
    The (q, pi)-integer [n]

    Args:
        n: Any integer

    Returns:
        q^{1-n} + pi q^{3-n} + ... + pi^{n-1} q^{n-1} for n >= 0,
        and -pi^m [m] for n = -m < 0
    """
    if n >= 0:
        return GPScalar({(1 - n + 2 * i, i % 2): 1 for i in range(n)})
    m = -n
    return -(qp_int(m).scale(p=m))


@lru_cache(maxsize=None)
def qp_factorial(n):
    if n < 0:
        raise ValueError(f"Factorial of a negative integer {n}")
    result = GPScalar.coerce(1)
    for i in range(1, n + 1):
        result = result * qp_int(i)
    return result


@lru_cache(maxsize=None)
def qp_binom(n, r):
    """
    The (q, pi)-binomial coefficient, computed by the Pascal recursion

    [n choose r] = q^{-r} [n-1 choose r] + (pi q)^{n-r} [n-1 choose r-1]
    for n >= 0, and the negative-n convention
    [-m choose r] = (-1)^r pi^{mr + binom(r,2)} [m+r-1 choose r].
    """
    if r < 0:
        return GPScalar()
    if n < 0:
        m = -n
        sign = -1 if r % 2 else 1
        return qp_binom(m + r - 1, r).scale(p=m * r + r * (r - 1) // 2, c=sign)
    if r == 0:
        return GPScalar.coerce(1)
    if r > n:
        return GPScalar()
    return (qp_binom(n - 1, r).scale(d=-r)
            + qp_binom(n - 1, r - 1).scale(d=n - r, p=n - r))


def qp_binom_by_division(n, r):
    """Binomial coefficient as [n][n-1]...[n-r+1] / [r]!, divided exactly"""
    if r < 0:
        return GPScalar()
    numerator = GPScalar.coerce(1)
    for i in range(r):
        numerator = numerator * qp_int(n - i)
    return numerator.exact_divide(qp_factorial(r))


def qp_trinom(n, r, s):
    """Trinomial coefficient [n choose r, s] = [n choose r][n-r choose s]"""
    if r < 0 or s < 0:
        return GPScalar()
    return qp_binom(n, r) * qp_binom(n - r, s)


def qp_multinom(n, alpha):
    """
    Multinomial coefficient [n]! / ([alpha_1]! ... [alpha_k]!)

    Args:
        n: Nonnegative integer
        alpha: Composition of n

    Returns:
        GPScalar
    """
    alpha = list(alpha)
    if any(a < 0 for a in alpha):
        raise ValueError(f"Composition has a negative part: {alpha}")
    if n < 0 or sum(alpha) != n:
        raise ValueError(f"Composition {alpha} is not a composition of {n}")
    result = GPScalar.coerce(1)
    remaining = n
    for a in alpha:
        result = result * qp_binom(remaining, a)
        remaining -= a
    return result


def bc_poly(m, n, r, which):
    """
    The graded dimensions b_{m,n}(r) and c_{m,n}(r)

    These satisfy c_{m,n}(r) = b_{m,n}(r) + b_{m,n}(r+1); the c's are the
    graded superdimensions of the terms of the singular Rouquier complex and
    the b's those of the images of its differentials.

    Args:
        m, n: Integers
        r: Nonnegative integer
        which: 'b' or 'c'
    """
    if r < 0:
        raise ValueError(f"bc_poly needs r >= 0, got {r}")
    prefactor = pi_q2inv(sharp(n - r, r))
    if which == 'c':
        return (prefactor.scale(d=(m - n + r) * n + (n - r) * r)
                * qp_binom(m + r, n) * qp_binom(n, r))
    if which != 'b':
        raise ValueError(f"which must be 'b' or 'c', got {which!r}")
    total = GPScalar()
    for s in range(r):
        term = pi_q2(n - r + m * (r - s - 1)).scale(
            d=(m - n + r - 1) * (n - r + s + 1) + (n - r) * s)
        total = total + term * qp_binom(m + s, n - r + s + 1) * qp_binom(n - r + s, s)
    return prefactor * total


def generating_product(n):
    """
    Coefficients of prod_{r=1}^n (1 + pi^{r-1} q^{2r-n-1} x) as a list indexed
    by the power of x
    """
    coeffs = [GPScalar.coerce(1)]
    for r in range(1, n + 1):
        factor = q_power(2 * r - n - 1, r - 1)
        shifted = [GPScalar()] + [c * factor for c in coeffs]
        coeffs = [a + b for a, b in zip(coeffs + [GPScalar()], shifted)]
    return coeffs


def poincare_sum(n):
    """q^{-binom(n,2)} sum over S_n of (pi q^2)^{length}"""
    total = GPScalar()
    for w in all_permutations(n):
        total = total + pi_q2(perm_length(w))
    return total.scale(d=-(n * (n - 1) // 2))
