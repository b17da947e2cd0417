"""
The module V(-ell) over the covering quantum group of sl2

Vectors have GPScalar coordinates in the basis b_0, ..., b_ell, where b_n
has weight 2n - ell. E raises and F lowers the index n.
"""

import logging
import random

from .combinatorics import binom2
from .qpi_scalars import GPScalar, pi_q2, q_power, qp_binom, qp_factorial, qp_int

logger = logging.getLogger(__name__)

OPERATORS = ('E', 'F')


def _sign(exponent):
    return -1 if exponent % 2 else 1


def _check_ell(ell):
    if not isinstance(ell, int) or ell < 0:
        raise ValueError(f"ell must be a nonnegative integer, got {ell!r}")


def _check_weight(ell, k):
    if abs(k) > ell or (ell - k) % 2:
        raise ValueError(f"Weight {k} does not occur in V(-{ell})")


class VModule:
    """
    Vector of V(-ell)

    Attributes:
        ell: Highest weight parameter
        coords: List of ell + 1 GPScalar coordinates
    """

    __slots__ = ('ell', 'coords')

    def __init__(self, ell, coords=None):
        _check_ell(ell)
        self.ell = ell
        if coords is None:
            coords = [GPScalar() for _ in range(ell + 1)]
        coords = [GPScalar.coerce(c) for c in coords]
        if len(coords) != ell + 1:
            raise ValueError(f"V(-{ell}) has {ell + 1} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def basis(cls, ell, n):
        """The basis vector b_n"""
        if not 0 <= n <= ell:
            raise ValueError(f"b_{n} is not a basis vector of V(-{ell})")
        vec = cls(ell)
        vec.coords[n] = GPScalar.coerce(1)
        return vec

    def weight_of(self, n):
        return 2 * n - self.ell

    def weight_component(self, k):
        """Projection onto the weight space 1_k V"""
        _check_weight(self.ell, k)
        n = (k + self.ell) // 2
        result = VModule(self.ell)
        result.coords[n] = self.coords[n]
        return result

    def _check_same(self, other):
        if not isinstance(other, VModule) or other.ell != self.ell:
            raise ValueError("Vectors must live in the same module V(-ell)")

    def __add__(self, other):
        self._check_same(other)
        return VModule(self.ell, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check_same(other)
        return VModule(self.ell, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return VModule(self.ell, [-a for a in self.coords])

    def scale(self, scalar):
        scalar = GPScalar.coerce(scalar)
        return VModule(self.ell, [scalar * a for a in self.coords])

    def __eq__(self, other):
        if not isinstance(other, VModule):
            return NotImplemented
        return self.ell == other.ell and self.coords == other.coords

    def __hash__(self):
        return hash((self.ell, tuple(self.coords)))

    def is_zero(self):
        return not any(self.coords)

    def to_json(self):
        return {'ell': self.ell, 'coords': [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(data['ell'], [GPScalar.from_json(c) for c in data['coords']])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid V(-ell) JSON: {data!r}") from e

    def __str__(self):
        pieces = [f"({c})*b{n}" for n, c in enumerate(self.coords) if c]
        return ' + '.join(pieces) if pieces else '0'

    def __repr__(self):
        return f"VModule({self.ell}, {self})"


def act_div(ell, which, d, n):
    """
    Coefficient of a divided power acting on a basis vector

    E^(d) b_n = [n+d choose d] b_{n+d}, and
    F^(d) b_{n+d} = pi^{binom(d,2) + nd} [ell-n choose d] b_n.

    Args:
        ell: Module parameter
        which: 'E' or 'F'
        d: Divided power
        n: The lower index of the pair (n, n+d)

    Returns:
        GPScalar, zero when the indices leave [0, ell]
    """
    _check_ell(ell)
    if which not in OPERATORS:
        raise ValueError(f"Operator must be 'E' or 'F', got {which!r}")
    if d < 0 or n < 0 or n + d > ell:
        return GPScalar()
    if which == 'E':
        return qp_binom(n + d, d)
    return qp_binom(ell - n, d).scale(p=binom2(d) + n * d)


def divided_power(which, d, v, barred=False):
    """
    Apply E^(d) or F^(d) to a vector

    With barred set, apply the bar divided powers, which differ by pi^{binom(d,2)}.
    """
    if which not in OPERATORS:
        raise ValueError(f"Operator must be 'E' or 'F', got {which!r}")
    ell = v.ell
    result = VModule(ell)
    if d < 0:
        return result
    for n, c in enumerate(v.coords):
        if not c:
            continue
        if which == 'E' and n + d <= ell:
            result.coords[n + d] = result.coords[n + d] + c * act_div(ell, 'E', d, n)
        elif which == 'F' and n - d >= 0:
            result.coords[n - d] = result.coords[n - d] + c * act_div(ell, 'F', d, n - d)
    if barred:
        result = result.scale(q_power(0, binom2(d)))
    return result


def power(which, d, v):
    """Apply E or F d times"""
    for _ in range(d):
        v = divided_power(which, 1, v)
    return v


def t_op(v, direction='forward'):
    """
    The braid operator T and its inverse

    On the weight space -k, T = sum_{d >= max(0,-k)} (-q)^d E^(k+d) F^(d);
    on the weight space k, T^-1 = sum_{d >= max(0,-k)} (-q)^{-d} Fbar^(k+d) Ebar^(d).
    """
    if direction not in ('forward', 'inverse'):
        raise ValueError(f"Direction must be 'forward' or 'inverse', got {direction!r}")
    ell = v.ell
    result = VModule(ell)
    for n, c in enumerate(v.coords):
        if not c:
            continue
        piece = VModule.basis(ell, n).scale(c)
        weight = 2 * n - ell
        k = -weight if direction == 'forward' else weight
        for d in range(max(0, -k), ell + 1):
            if direction == 'forward':
                term = divided_power('E', k + d, divided_power('F', d, piece))
                factor = q_power(d).scale(c=_sign(d))
            else:
                inner = divided_power('E', d, piece, barred=True)
                term = divided_power('F', k + d, inner, barred=True)
                factor = q_power(-d).scale(c=_sign(d))
            result = result + term.scale(factor)
    return result


def t_coefficient(ell, n):
    """T(b_n) = (-1)^n pi^{binom(n,2) + nn'} q^{n + nn'} b_{n'}"""
    n_prime = ell - n
    return q_power(n + n * n_prime, binom2(n) + n * n_prime).scale(c=_sign(n))


def varpi(v):
    """The anti-linear involution b_n -> pi^{n(ell-n)} b_{ell-n}"""
    ell = v.ell
    result = VModule(ell)
    for n, c in enumerate(v.coords):
        result.coords[ell - n] = c.bar().scale(p=n * (ell - n))
    return result


def commutator_defect(ell):
    """
    Check EF - pi FE = bar([k]) on every weight space

    Returns:
        None, or the first weight where the relation fails
    """
    pi = q_power(0, 1)
    for n in range(ell + 1):
        b = VModule.basis(ell, n)
        k = 2 * n - ell
        lhs = divided_power('E', 1, divided_power('F', 1, b)) - divided_power('F', 1, divided_power('E', 1, b)).scale(pi)
        if lhs != b.scale(qp_int(k).bar()):
            return k
    return None


def divided_power_defect(ell, d):
    """
    Check [d]! E^(d) = E^d and [d]! F^(d) = F^d on every basis vector

    Returns:
        None, or (operator, n) for the first failure
    """
    factorial = qp_factorial(d)
    for n in range(ell + 1):
        b = VModule.basis(ell, n)
        for which in OPERATORS:
            if divided_power(which, d, b).scale(factorial) != power(which, d, b):
                return which, n
    return None


def reflection_coefficient(ell, k):
    """
    The scalar of T on K_0 for n = (ell - k)/2:
    (-1)^n (pi q^2)^{binom(n+1,2) + nk} q^{-nk}
    """
    _check_weight(ell, k)
    n = (ell - k) // 2
    return pi_q2(binom2(n + 1) + n * k).scale(d=-n * k, c=_sign(n))


def euler_target(ell, k):
    """q^{nk} times the reflection coefficient, the expected Euler characteristic"""
    n = (ell - k) // 2
    return reflection_coefficient(ell, k).scale(d=n * k)


def k0_dictionary(ell, n):
    """
    Grothendieck group shadows of the rank-one bimodules

    Returns:
        {'E': coefficient of b_{n+1} in q^n E b_n,
         'F': coefficient of b_n in q^{ell-3n-1} F b_{n+1}}
    """
    _check_ell(ell)
    if not 0 <= n < ell:
        raise ValueError(f"n must satisfy 0 <= n < ell = {ell}, got {n}")
    return {
        'E': act_div(ell, 'E', 1, n).scale(d=n),
        'F': act_div(ell, 'F', 1, n).scale(d=ell - 3 * n - 1),
    }


def random_vector(ell, rng=None, max_coeff=2, spread=2):
    rng = rng or random.Random(0)
    coords = []
    for _ in range(ell + 1):
        terms = {}
        for _ in range(rng.randint(0, 2)):
            terms[(rng.randint(-spread, spread), rng.randint(0, 1))] = rng.randint(-max_coeff, max_coeff)
        coords.append(GPScalar(terms))
    return VModule(ell, coords)
