"""
Invariant suites behind `oddgrass verify` and POST /api/verify

Each suite runs a list of named checks. A check returns None when it holds
and a short witness string otherwise; the suite collects them into a report
dictionary that is deterministic for given bounds and seed.
"""

import logging
import random
import time

from . import bimodules, osym, rouquier, uqpi
from .combinatorics import (add_horizontal_strips, binom2, composition_n, dominates, enum_grpar,
                            min_coset_reps, partitions_of, perm_length, pieri_sign, stats, transpose)
from .errors import InternalError
from .grass_cohomology import (alpha, delta_auto, delta_closed, expected_oh_rank, gram_pairing_check,
                               oh_from_osym, oh_mul, oh_rank, psi_closed_e, psi_iso, random_oh,
                               sgn_from_lr, sgn_function)
from .onh import (ONHWord, OPolElem, compositions, decompose_by_solve, decompose_over_osym, demazure,
                  demazure_kernel_dimension, in_image, leading_schur_check, omega, omega_xi,
                  onh_apply, opol_dimension, opol_mul, osym_to_opol, recompose, right_action, schur_poly, xi)
from .qpi_scalars import (GPScalar, bc_poly, generating_product, pi_q2, poincare_sum, q_power,
                          qp_binom, qp_binom_by_division, qp_factorial, qp_multinom, qp_trinom)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
SUITES = ('qpi', 'osym', 'onh', 'oh', 'bimod', 'rouquier', 'uqpi')
DEFAULT_MAX_ELL = 4
DEFAULT_MAX_DEGREE = 8


def _sign(exponent):
    return -1 if exponent % 2 else 1


class SuiteRun:
    """
    Collects the checks of one suite

    Attributes:
        suite: Suite name
        parameters: Bounds and seed, copied into the report
        checks: List of {'name', 'passed', 'witness'} records
    """

    def __init__(self, suite, parameters, timings=False):
        self.suite = suite
        self.parameters = dict(parameters)
        self.timings = timings
        self.checks = []

    def run(self, name, check, *args):
        """Run one check, turning exceptions into failures with a witness"""
        start = time.perf_counter()
        try:
            witness = check(*args)
        except (InternalError, ValueError, ZeroDivisionError) as e:
            logger.error("Check %s.%s raised %s", self.suite, name, e)
            witness = f"{type(e).__name__}: {e}"
        record = {'name': name, 'passed': witness is None, 'witness': witness}
        if self.timings:
            record['elapsed'] = round(time.perf_counter() - start, 3)
        logger.debug("%s.%s: %s", self.suite, name, 'pass' if witness is None else witness)
        self.checks.append(record)
        return witness is None

    def report(self):
        return {
            'suite': self.suite,
            'parameters': self.parameters,
            'checks': self.checks,
            'passed': all(check['passed'] for check in self.checks),
            'schema_version': SCHEMA_VERSION,
        }


# (q, pi) identities

def _check_pascal(top):
    for n in range(-top, top + 1):
        for r in range(top + 1):
            lhs = qp_binom(n, r)
            first = qp_binom(n - 1, r).scale(d=-r) + qp_binom(n - 1, r - 1).scale(d=n - r, p=n - r)
            second = qp_binom(n - 1, r).scale(d=r, p=r) + qp_binom(n - 1, r - 1).scale(d=r - n)
            if lhs != first or lhs != second:
                return f"Pascal recursion fails at n={n}, r={r}"
    return None


def _check_binom_division(top):
    for n in range(-top, top + 1):
        for r in range(top + 1):
            if qp_binom(n, r) != qp_binom_by_division(n, r):
                return f"Pascal and division routes disagree at n={n}, r={r}"
    return None


def _check_trinomial(top):
    for n in range(-top, top + 1):
        for r in range(top + 1):
            for s in range(top + 1 - r):
                rhs = (qp_trinom(n - 1, r, s).scale(d=s - r, p=s)
                       + qp_trinom(n - 1, r - 1, s).scale(d=n - r, p=n - r)
                       + qp_trinom(n - 1, r, s - 1).scale(d=s - n))
                if qp_trinom(n, r, s) != rhs:
                    return f"trinomial recursion fails at n={n}, r={r}, s={s}"
    return None


def _check_alternating_trinomial(top):
    for n in range(-top, top + 1):
        for r in range(top + 1):
            total = GPScalar()
            for t in range(r + 1):
                s = r - t
                total = total + qp_trinom(n + s, s, t).scale(d=-t, p=binom2(t), c=_sign(t))
            if total != q_power(n * r, n * r):
                return f"alternating trinomial sum is {total} at n={n}, r={r}"
    return None


def _check_box_formula(top):
    for n in range(top + 1):
        for r in range(n + 1):
            total = GPScalar()
            for lam in enum_grpar(r, n - r):
                total = total + pi_q2(sum(lam))
            if qp_binom(n, r).scale(d=(n - r) * r) != total:
                return f"box expansion of the binomial fails at n={n}, r={r}"
    return None


def _check_numerology(top):
    for m in range(-top, top + 1):
        for n in range(-top, top + 1):
            for r in range(top + 1):
                c = bc_poly(m, n, r, 'c')
                if c != bc_poly(m, n, r, 'b') + bc_poly(m, n, r + 1, 'b'):
                    return f"c = b(r) + b(r+1) fails at m={m}, n={n}, r={r}"
    return None


def _check_numerology_corollary(top):
    for n in range(top + 1):
        for r in range(n + 1):
            total = GPScalar()
            for s in range(r + 1):
                total = total + pi_q2((n - r) * (r - s)).scale(d=(n - r - 1) * s) * qp_binom(n - r + s - 1, s)
            if qp_binom(n, r).scale(d=(n - r) * r) != total:
                return f"binomial expansion from the numerology fails at n={n}, r={r}"
    return None


def _check_bar_identities(top):
    for n in range(top + 1):
        if qp_factorial(n).bar() != qp_factorial(n).scale(p=binom2(n)):
            return f"bar of [{n}]! is not pi^binom(n,2) [{n}]!"
        for r in range(n + 1):
            if qp_binom(n, r).bar() != qp_binom(n, r).scale(p=(n - r) * r):
                return f"bar of [{n} choose {r}] has the wrong pi power"
            for s in range(n - r + 1):
                trinom = qp_trinom(n, r, s)
                if trinom.bar() != trinom.scale(p=(n - r) * (r + s) + s):
                    return f"bar of [{n} choose {r},{s}] has the wrong pi power"
    return None


def _check_generating_function(top):
    for n in range(top + 1):
        coeffs = generating_product(n)
        for r in range(n + 1):
            if coeffs[r] != qp_binom(n, r).scale(p=binom2(r)):
                return f"x^{r} coefficient of the product for n={n} is {coeffs[r]}"
    return None


def _check_poincare(top):
    for n in range(min(top, 6) + 1):
        if poincare_sum(n) != qp_factorial(n):
            return f"[{n}]! differs from the length generating function of S_{n}"
        for alpha_ in _compositions_up_to(n):
            total = GPScalar()
            for w in min_coset_reps(alpha_):
                total = total + pi_q2(perm_length(w))
            if qp_multinom(n, alpha_) != total.scale(d=-composition_n(alpha_)):
                return f"multinomial [{n}; {list(alpha_)}] differs from its coset sum"
    return None


def _compositions_up_to(n):
    if n == 0:
        return [()]
    result = []
    for first in range(1, n + 1):
        for rest in _compositions_up_to(n - first):
            result.append((first,) + rest)
    return result


def qpi_suite(run, max_ell, max_degree, rng):
    top = max_degree
    run.run('pascal', _check_pascal, top)
    run.run('binomial_division', _check_binom_division, top)
    run.run('trinomial_recursion', _check_trinomial, top)
    run.run('alternating_trinomial', _check_alternating_trinomial, top)
    run.run('box_formula', _check_box_formula, top)
    run.run('numerology', _check_numerology, min(top, 5))
    run.run('numerology_corollary', _check_numerology_corollary, top)
    run.run('bar_identities', _check_bar_identities, top)
    run.run('generating_function', _check_generating_function, top)
    run.run('poincare', _check_poincare, min(top, 5))


# OSym

def _check_grassmannian(top):
    for r in range(top + 1):
        delta = osym.OSymElem.one() if r == 0 else osym.OSymElem()
        left, right = osym.OSymElem(), osym.OSymElem()
        for s in range(r + 1):
            left = left + osym.mul(osym.e_elem(s), osym.h(r - s)).scale(_sign(s))
            right = right + osym.mul(osym.h(s), osym.e_elem(r - s)).scale(_sign(s))
        if left != delta:
            return f"sum (-1)^s e_s h_(r-s) is {left} at r={r}"
        if right != delta:
            return f"sum (-1)^s h_s e_(r-s) is {right} at r={r}"
    return None


def _check_schur_forms(top):
    for d in range(top + 1):
        parts = list(partitions_of(d))
        schurs = {lam: osym.schur(lam) for lam in parts}
        for lam in parts:
            st = stats(lam)
            for mu in parts:
                minus = osym.pair(schurs[lam], schurs[mu], 'minus')
                plus = osym.pair(schurs[lam], schurs[mu], 'plus')
                expected_minus = _sign(st.dN) if lam == mu else 0
                expected_plus = _sign(st.dE) if lam == mu else 0
                if minus != expected_minus:
                    return f"(s{list(lam)}, s{list(mu)})^- = {minus}, expected {expected_minus}"
                if plus != expected_plus:
                    return f"(s{list(lam)}, s{list(mu)})^+ = {plus}, expected {expected_plus}"
    return None


def _check_schur_symmetries(top):
    for d in range(top + 1):
        for lam in partitions_of(d):
            st = stats(lam)
            s = osym.schur(lam)
            if osym.psi(s) != osym.schur(transpose(lam)).scale(_sign(st.NE + d)):
                return f"psi(s{list(lam)}) is not +-s{list(transpose(lam))}"
            if osym.star(osym.gamma(s)) != s.scale(_sign(st.dN + st.dE)):
                return f"gamma(s{list(lam)})* is not +-s{list(lam)}"
    return None


def _check_semiorthogonality(top):
    for d in range(top + 1):
        parts = list(partitions_of(d))
        for lam in parts:
            st = stats(lam)
            for mu in parts:
                value = osym.pair(osym.h_basis(lam), osym.e_basis_element(mu), 'minus')
                mu_t = transpose(mu)
                if lam == mu_t and value != _sign(st.NE + st.dN):
                    return f"(h{list(lam)}, e{list(mu)})^- = {value} on the diagonal"
                if lam > mu_t and value:
                    return f"(h{list(lam)}, e{list(mu)})^- = {value}, expected 0"
    return None


def _check_pieri(top):
    for d in range(min(top, 7) + 1):
        for lam in partitions_of(d):
            for r in range(1, min(4, top - d) + 1):
                expected = osym.OSymElem()
                for mu in add_horizontal_strips(lam, r):
                    expected = expected + osym.schur(mu).scale(pieri_sign(lam, mu, r))
                if osym.mul(osym.schur(lam), osym.h(r)) != expected:
                    return f"Pieri rule fails for s{list(lam)} h_{r}"
    return None


def _check_kostka(top):
    for d in range(top + 1):
        parts, matrix = osym.kostka_matrix(d)
        for i, lam in enumerate(parts):
            if matrix[i][i] != 1:
                return f"K_{list(lam)},{list(lam)} = {matrix[i][i]}"
            for j, mu in enumerate(parts):
                if matrix[i][j] and not dominates(lam, mu):
                    return f"K_{list(lam)},{list(mu)} = {matrix[i][j]} although lam does not dominate mu"
    return None


def _check_coproduct(top):
    for r in range(min(top, 6) + 1):
        expected = osym.OSymTensor()
        for s in range(r + 1):
            expected = expected + osym.OSymTensor.pure(osym.e_elem(s), osym.e_elem(r - s))
        if osym.coproduct(osym.e_elem(r), 'plus') != expected:
            return f"Delta^+(e_{r}) is not sum e_s (x) e_(r-s)"
    return None


def _check_random_round_trips(top, rng):
    for d in range(top + 1):
        x = osym.random_element(d, rng)
        if osym.psi(osym.psi(x)) != x:
            return f"psi is not an involution on {x}"
        if osym.from_schur(osym.to_schur(x)) != x:
            return f"Schur expansion does not round trip on {x}"
        if osym.from_e_basis(osym.e_basis(x)) != x:
            return f"e-expansion does not round trip on {x}"
    return None


def _check_central(top):
    for r in range(top // 2 + 1):
        z = osym.z_elem(r)
        for s in range(1, top - 2 * r + 1):
            if osym.mul(z, osym.h(s)) != osym.mul(osym.h(s), z):
                return f"z_{2 * r} does not commute with h_{s}"
    if top >= 1 and osym.z_elem(1) != osym.mul(osym.o(), osym.o()):
        return "z_2 differs from o^2"
    return None


def _partition_series(n, top):
    counts = [1] + [0] * top
    for r in range(1, n + 1):
        for d in range(r, top + 1):
            counts[d] += counts[d - r]
    return counts


def _check_truncation(top):
    for n in range(top + 1):
        if not osym.truncate(osym.e_elem(n + 1), n).is_zero():
            return f"e_{n + 1} survives in OSym_{n}"
        counts = _partition_series(n, top)
        expected = GPScalar()
        for d, count in enumerate(counts):
            if count:
                expected = expected + pi_q2(d).scale(c=count)
        if osym.graded_dimension(n, top) != expected:
            return f"graded dimension of OSym_{n} is not prod 1/(1 - (pi q^2)^r)"
        for lam in partitions_of(min(top, n + 2)):
            if len(lam) > n and osym.truncated_schur(osym.schur(lam), n):
                return f"s{list(lam)} survives in OSym_{n}"
    return None


def osym_suite(run, max_ell, max_degree, rng):
    top = max_degree
    run.run('grassmannian_relations', _check_grassmannian, top)
    run.run('schur_forms', _check_schur_forms, top)
    run.run('schur_symmetries', _check_schur_symmetries, top)
    run.run('semiorthogonality', _check_semiorthogonality, top)
    run.run('pieri', _check_pieri, top)
    run.run('kostka_unitriangular', _check_kostka, top)
    run.run('coproduct_e', _check_coproduct, top)
    run.run('round_trips', _check_random_round_trips, top, rng)
    run.run('central_elements', _check_central, top)
    run.run('truncation', _check_truncation, top)


# Odd nil-Hecke

def _random_opol(n, max_half_degree, rng, terms=3):
    f = OPolElem(n)
    for _ in range(terms):
        d = rng.randint(0, max_half_degree)
        monos = compositions(n, d)
        f = f + OPolElem.monomial(rng.choice(monos), rng.choice((-2, -1, 1, 2)))
    return f


def _relations(n):
    def word(*gens, coeff=1):
        return ONHWord(n, gens, coeff)

    relations = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                relations.append((f"x{i}x{j}", [word(('x', i), ('x', j)), word(('x', j), ('x', i))], False))
    for j in range(1, n):
        relations.append((f"t{j}^2", [word(('t', j), ('t', j))], False))
        for i in range(1, n):
            if abs(i - j) > 1:
                relations.append((f"t{i}t{j}", [word(('t', i), ('t', j)), word(('t', j), ('t', i))], False))
        for i in range(1, n + 1):
            if i not in (j, j + 1):
                relations.append((f"x{i}t{j}", [word(('x', i), ('t', j)), word(('t', j), ('x', i))], False))
        if j + 1 < n:
            relations.append((f"braid{j}", [word(('t', j), ('t', j + 1), ('t', j)),
                                            word(('t', j + 1), ('t', j), ('t', j + 1))], False))
        relations.append((f"dot-slide{j}", [word(('x', j), ('t', j)),
                                            word(('t', j), ('x', j + 1), coeff=-1)], True))
        relations.append((f"slide-dot{j}", [word(('t', j), ('x', j)),
                                            word(('x', j + 1), ('t', j), coeff=-1)], True))
    return relations


def _check_relations(max_n, max_half_degree, rng):
    for n in range(2, max_n + 1):
        samples = [_random_opol(n, max_half_degree, rng) for _ in range(2)]
        for name, words, is_identity in _relations(n):
            for f in samples:
                total = OPolElem(n)
                for w in words:
                    total = total + onh_apply(w, f)
                if total != (f if is_identity else OPolElem(n)):
                    return f"relation {name} fails in ONH_{n} on {f}"
    return None


def _check_normalization(max_n):
    for n in range(1, max_n + 1):
        if onh_apply(omega(n), xi(n)) != OPolElem.one(n):
            return f"omega_{n} . xi_{n} is not 1"
    return None


def _check_schur_polynomials(max_n, top):
    for n in range(1, max_n + 1):
        for lam in enum_grpar(n, max_n):
            if sum(lam) > top:
                continue
            if schur_poly(lam, n) != osym_to_opol(osym.schur(lam), n):
                return f"(omega xi)_{n} x^{list(lam)} differs from the image of s{list(lam)}"
            if not leading_schur_check(lam, n):
                return f"s{list(lam)} in {n} variables does not lead with x^lam"
    return None


def _check_kernel_and_image(max_n, top):
    for n in range(2, max_n + 1):
        for d in range(top + 1):
            expected = len(osym.osym_n_basis(n, d))
            if demazure_kernel_dimension(n, d) != expected:
                return f"common kernel of the Demazure operators in OPol_{n}, degree {2 * d}, is not OSym_{n}"
            for lam in osym.osym_n_basis(n, d):
                target = osym_to_opol(osym.schur(lam), n)
                for j in range(1, n):
                    if not in_image(j, target):
                        return f"s{list(lam)} is not in the image of d_{j} on OPol_{n}"
    return None


def _check_idempotents(max_n, max_half_degree, rng):
    for n in range(1, max_n + 1):
        f = _random_opol(n, max_half_degree, rng)
        g = omega_xi(f)
        if omega_xi(g) != g:
            return f"(omega xi)_{n} is not idempotent on {f}"
        for j in range(1, n):
            if not demazure(j, g).is_zero():
                return f"(omega xi)_{n} f is not killed by d_{j}"
    return None


def _check_dimensions(max_n, top):
    for n in range(1, max_n + 1):
        product = osym.graded_dimension(n, top) * poincare_sum(n).scale(d=binom2(n))
        truncated = GPScalar({key: c for key, c in product.terms.items() if key[0] <= 2 * top})
        if opol_dimension(n, top) != truncated:
            return f"graded dimension of OPol_{n} is not that of OSym_{n} times q^binom(n,2)[n]!"
    return None


def _check_decomposition(max_n, max_half_degree, rng):
    for n in range(1, max_n + 1):
        f = _random_opol(n, max_half_degree, rng)
        coeffs = decompose_over_osym(f)
        if recompose(coeffs, n) != f:
            return f"Schubert decomposition does not round trip on {f}"
        if coeffs != decompose_by_solve(f):
            return f"Schubert stripping and the componentwise solve disagree on {f}"
    return None


def _check_right_action(max_n, rng):
    for n in range(2, max_n + 1):
        f = _random_opol(n, 3, rng)
        for r in range(1, n + 1):
            a = osym_to_opol(osym.e_elem(r), n)
            for j in range(1, n):
                w = ONHWord(n, [('t', j)])
                if right_action(opol_mul(a, f), w) != opol_mul(a, right_action(f, w)):
                    return f"e_{r} does not commute with the right action of t{j} on OPol_{n}"
    return None


def onh_suite(run, max_ell, max_degree, rng):
    max_n = max(2, min(max_ell, 4))
    half = min(max_degree, 5)
    run.run('normalization', _check_normalization, max_n + 1)
    run.run('relations', _check_relations, max_n, min(half, 4), rng)
    run.run('schur_polynomials', _check_schur_polynomials, max_n, max_degree)
    run.run('kernel_and_image', _check_kernel_and_image, max_n, half)
    run.run('idempotents', _check_idempotents, max_n, min(half, 3), rng)
    run.run('graded_dimensions', _check_dimensions, max_n, half)
    run.run('schubert_decomposition', _check_decomposition, min(max_n, 3), min(half, 4), rng)
    run.run('right_action_commutes', _check_right_action, max_n, rng)


# Equivariant cohomology of Grassmannians

_OSYM_FAMILIES = {'h': osym.h, 'e': osym.e_elem, 'eps': osym.eps, 'eta': osym.eta}


def _shapes(max_ell):
    return [(n, ell) for ell in range(max_ell + 1) for n in range(ell + 1)]


def _check_oh_ranks(max_ell):
    for n, ell in _shapes(max_ell):
        if oh_rank(n, ell) != expected_oh_rank(n, ell):
            return f"OH_{n}^{ell} has rank {oh_rank(n, ell)}, expected {expected_oh_rank(n, ell)}"
    return None


def _check_gram(max_ell):
    for n, ell in _shapes(max_ell):
        witness = gram_pairing_check(n, ell)
        if witness:
            return f"OH_{n}^{ell}: {witness}"
    return None


def _check_sign_function(max_ell):
    for n, ell in _shapes(max_ell):
        for mu in enum_grpar(ell - n, n):
            if sgn_function(mu, n, ell) != sgn_from_lr(mu, n, ell):
                return f"sgn{list(mu)} for OH_{n}^{ell} differs between the trace and the LR coefficient"
    return None


def _check_oh_products(max_ell, rng):
    for n, ell in _shapes(max_ell):
        if ell == 0:
            continue
        a, b, c = (random_oh(n, ell, rng) for _ in range(3))
        if oh_mul(oh_mul(a, b), c) != oh_mul(a, oh_mul(b, c)):
            return f"OH_{n}^{ell} multiplication is not associative"
        if psi_iso(oh_mul(a, b)) != oh_mul(psi_iso(a), psi_iso(b)):
            return f"psi is not multiplicative on OH_{n}^{ell}"
        if psi_iso(psi_iso(a), 'inverse') != a:
            return f"the inverse of psi does not undo psi on OH_{n}^{ell}"
        if alpha(oh_mul(a, b)) != alpha(a) * alpha(b):
            return f"alpha is not multiplicative on OH_{n}^{ell}"
    return None


def _check_closed_forms(max_ell, max_r=3):
    for n, ell in _shapes(max_ell):
        if ell == 0:
            continue
        for r in range(max_r + 1):
            image = psi_iso(oh_from_osym(osym.e_elem(r), n, ell))
            if image != psi_closed_e(r, n, ell):
                return f"psi(e_{r}) on OH_{n}^{ell} differs from its closed form"
        for family, make in sorted(_OSYM_FAMILIES.items()):
            for r in range(1, max_r + 1):
                if delta_auto(oh_from_osym(make(r), n, ell)) != delta_closed(family, r, n, ell):
                    return f"delta({family}_{r}) on OH_{n}^{ell} differs from its closed form"
    return None


def oh_suite(run, max_ell, max_degree, rng):
    run.run('ranks', _check_oh_ranks, max_ell + 1)
    run.run('trace_gram', _check_gram, max_ell)
    run.run('sign_function', _check_sign_function, max_ell)
    run.run('products', _check_oh_products, max_ell, rng)
    run.run('closed_forms', _check_closed_forms, max_ell)


# Bimodules

def _rank_one_pairs(max_ell):
    return [(n, ell) for ell in range(1, max_ell + 1) for n in range(ell)]


def _each_pair(max_ell, check, *args):
    for n, ell in _rank_one_pairs(max_ell):
        witness = check(n, ell, *args)
        if witness:
            return witness
    return None


def _check_reductions(n, ell, extra=3):
    for p in range(n + 1, n + extra + 1):
        v_routes = [bimodules.v_reduce(n, ell, p, method) for method in bimodules.REDUCTION_METHODS]
        if any(route != v_routes[0] for route in v_routes[1:]):
            return f"the reductions of v_{n}(x^{p}) for ell={ell} disagree"
        u_routes = [bimodules.u_reduce(n, ell, p, method) for method in bimodules.REDUCTION_METHODS]
        if any(route != u_routes[0] for route in u_routes[1:]):
            return f"the reductions of u_{n}(x^{p}) for ell={ell} disagree"
    return None


def _check_collapsed_coev(n, ell):
    unit = bimodules.coev(n, ell)
    for form in ('right', 'left'):
        if bimodules.coev_collapsed(n, ell, form) != unit:
            return f"the {form} collapsed form of coev differs for n={n}, ell={ell}"
    return None


def _check_k0_ranks(n, ell):
    shadows = uqpi.k0_dictionary(ell, n)
    if bimodules.graded_rank('U', 'left', n, ell) != shadows['E']:
        return f"U_{n}^{ell} has left rank {bimodules.graded_rank('U', 'left', n, ell)}, E gives {shadows['E']}"
    if bimodules.graded_rank('V', 'left', n, ell) != shadows['F']:
        return f"V_{n}^{ell} has left rank {bimodules.graded_rank('V', 'left', n, ell)}, F gives {shadows['F']}"
    return None


def bimod_suite(run, max_ell, max_degree, rng):
    run.run('zigzag', _each_pair, max_ell, bimodules.zigzag_defect)
    run.run('tilde_zigzag', _each_pair, max_ell, bimodules.tilde_zigzag_defect)
    run.run('ev_balanced', _each_pair, max_ell, bimodules.ev_balanced_defect)
    run.run('coev_central', _each_pair, max_ell, bimodules.coev_centrality_defect)
    run.run('coev_collapsed', _each_pair, max_ell, _check_collapsed_coev)
    run.run('schur_action', _each_pair, max_ell, bimodules.schur_action_defect, min(max_degree, 3))
    run.run('reduction_routes', _each_pair, max_ell, _check_reductions)
    run.run('mate', _each_pair, max_ell, bimodules.mate_defect)
    run.run('chain_nilhecke', _each_pair, max_ell, bimodules.chain_nilhecke_defect)
    run.run('k0_ranks', _each_pair, max_ell, _check_k0_ranks)


# The singular Rouquier complex

def rouquier_suite(run, max_ell, max_degree, rng):
    for ell, k in rouquier.admissible_pairs(max_ell):
        label = f"ell={ell},k={k}"
        try:
            report = rouquier.verify_src(ell, k)
        except (InternalError, ValueError) as e:
            logger.error("Rouquier checks for %s raised %s", label, e)
            run.checks.append({'name': f"build[{label}]", 'passed': False,
                               'witness': f"{type(e).__name__}: {e}"})
            continue
        for check in report['checks']:
            run.checks.append({'name': f"{check['name']}[{label}]",
                               'passed': check['passed'], 'witness': check['witness']})


# V(-ell)

def _check_reflection(max_ell):
    for ell in range(max_ell + 1):
        for n in range(ell + 1):
            b = uqpi.VModule.basis(ell, n)
            if uqpi.t_op(uqpi.t_op(b, 'inverse')) != b or uqpi.t_op(uqpi.t_op(b), 'inverse') != b:
                return f"T and its inverse do not cancel on b_{n} in V(-{ell})"
            expected = uqpi.VModule.basis(ell, ell - n).scale(uqpi.t_coefficient(ell, n))
            if uqpi.t_op(b) != expected:
                return f"T(b_{n}) in V(-{ell}) is {uqpi.t_op(b)}, expected {expected}"
    return None


def _check_commutator(max_ell):
    for ell in range(max_ell + 1):
        k = uqpi.commutator_defect(ell)
        if k is not None:
            return f"EF - pi FE fails on the weight {k} space of V(-{ell})"
    return None


def _check_divided_powers(max_ell, max_d=4):
    for ell in range(max_ell + 1):
        for d in range(max_d + 1):
            bad = uqpi.divided_power_defect(ell, d)
            if bad is not None:
                which, n = bad
                return f"[{d}]! {which}^({d}) differs from {which}^{d} on b_{n} in V(-{ell})"
    return None


def _check_varpi(max_ell):
    for ell in range(max_ell + 1):
        for n in range(ell + 1):
            b = uqpi.VModule.basis(ell, n)
            if uqpi.varpi(uqpi.varpi(b)) != b:
                return f"varpi is not an involution on b_{n} in V(-{ell})"
            if uqpi.varpi(uqpi.divided_power('E', 1, b)) != uqpi.divided_power('F', 1, uqpi.varpi(b)):
                return f"varpi does not intertwine E and F on b_{n} in V(-{ell})"
    return None


def uqpi_suite(run, max_ell, max_degree, rng):
    top = 2 * max_ell + 2
    run.run('reflection', _check_reflection, top)
    run.run('commutator', _check_commutator, top)
    run.run('divided_powers', _check_divided_powers, min(top, 8))
    run.run('varpi', _check_varpi, top)


_SUITE_FUNCTIONS = {
    'qpi': qpi_suite,
    'osym': osym_suite,
    'onh': onh_suite,
    'oh': oh_suite,
    'bimod': bimod_suite,
    'rouquier': rouquier_suite,
    'uqpi': uqpi_suite,
}


def _check_bounds(max_ell, max_degree, seed):
    if not isinstance(max_ell, int) or max_ell < 1:
        raise ValueError(f"max_ell must be a positive integer, got {max_ell!r}")
    if not isinstance(max_degree, int) or max_degree < 0:
        raise ValueError(f"max_degree must be a nonnegative integer, got {max_degree!r}")
    if not isinstance(seed, int):
        raise ValueError(f"seed must be an integer, got {seed!r}")


def run_suite(suite, max_ell=DEFAULT_MAX_ELL, max_degree=DEFAULT_MAX_DEGREE, seed=0, timings=False):
    """
    Run one invariant suite, or all of them

    Args:
        suite: One of SUITES, or 'all'
        max_ell: Largest ell for the module-level checks
        max_degree: Degree bound for the OSym and polynomial checks
        seed: Seed for the randomized checks; each suite starts its own
            generator from it
        timings: Record the elapsed seconds of every check

    Returns:
        Report dictionary with suite, parameters, checks, passed and
        schema_version

    Raises:
        ValueError: for an unknown suite or invalid bounds
    """
    if suite != 'all' and suite not in _SUITE_FUNCTIONS:
        raise ValueError(f"Unknown suite {suite!r}, expected one of {SUITES + ('all',)}")
    _check_bounds(max_ell, max_degree, seed)
    parameters = {'max_ell': max_ell, 'max_degree': max_degree, 'seed': seed}
    if suite == 'all':
        combined = SuiteRun('all', parameters, timings)
        for name in SUITES:
            report = run_suite(name, max_ell, max_degree, seed, timings)
            for check in report['checks']:
                combined.checks.append(dict(check, name=f"{name}.{check['name']}"))
        return combined.report()

    logger.info("Running suite %s with %s", suite, parameters)
    run = SuiteRun(suite, parameters, timings)
    _SUITE_FUNCTIONS[suite](run, max_ell, max_degree, random.Random(seed))
    report = run.report()
    failed = sum(1 for check in report['checks'] if not check['passed'])
    logger.info("Suite %s finished: %d checks, %d failed", suite, len(report['checks']), failed)
    return report


def first_failure(report):
    """(name, witness) of the first failing check, or None"""
    for check in report['checks']:
        if not check['passed']:
            return check['name'], check['witness']
    return None
