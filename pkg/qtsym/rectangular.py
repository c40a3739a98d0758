"""
Rectangular (m,n) combinatorics and the Q_mn operators

A path is stored as the partition μ of cells above it inside the staircase δ_mn;
its vertical steps are the cells of the strip (μ + 1^n)/μ.
"""

import logging
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations

from qtsym import scalars
from qtsym.errors import InvalidShape, QtSymError, SplitError
from qtsym.macdonald import M, d0, hat_h
from qtsym.plethysm import eval_scalar, plethysm, scaled_x
from qtsym.scalars import ONE, ZERO, q
from qtsym.shapes import Partition, contains, multinomial, partitions, riser_sequence, strip_shape, subpartitions, z_mu
from qtsym.symfunc import (
    SymFunc, convert, elementary, expand_in_pi, homogeneous, monomial, pi_n, power_sum, schur
)


def staircase_rows(m, n):
    """
    r_k = floor(m(n-k)/n) for k = 1..n, zeros kept
    """

    if m < 1 or n < 1:
        raise QtSymError(f'Staircase needs m, n >= 1, got ({m},{n})')
    return tuple(m * (n - k) // n for k in range(1, n + 1))


def staircase(m, n):
    return Partition(staircase_rows(m, n))


class DyckPath:
    """
    An (m,n)-Dyck path given by the partition μ ⊆ δ_mn of cells between it and the staircase
    """

    __slots__ = ('m', 'mu', 'n')

    def __init__(self, m, n, mu=()):
        self.m = m
        self.n = n
        self.mu = Partition(mu)
        if not contains(staircase(m, n), self.mu):
            raise InvalidShape(f'{self.mu} does not fit in the ({m},{n}) staircase {staircase(m, n)}')

    @property
    def area(self):
        return staircase(self.m, self.n).size - self.mu.size

    def risers(self):
        """
        Heights of the columns of vertical steps, left to right
        """

        return riser_sequence(self.mu, self.n)

    def strip(self):
        return strip_shape(self.mu, self.n)

    def strip_schur(self):
        """
        s of the strip, which is e of its nonzero column heights
        """

        return elementary(Partition(sorted((h for h in self.risers() if h), reverse=True)))

    def abscissas(self):
        """
        x-position of each vertical step, top to bottom
        """

        return [self.mu.part(y) for y in range(self.n)]

    def word(self):
        """
        Step word from (0,0) to (m,n): 0 east, 1 north
        """

        steps = []
        x = 0
        for target in reversed(self.abscissas()):
            steps.extend([0] * (target - x))
            steps.append(1)
            x = target
        steps.extend([0] * (self.m - x))
        return tuple(steps)

    def parking_count(self):
        return multinomial(self.n, self.risers())

    def __eq__(self, other):
        return isinstance(other, DyckPath) and (self.m, self.n, self.mu) == (other.m, other.n, other.mu)

    def __hash__(self):
        return hash((self.m, self.n, self.mu))

    def __repr__(self):
        return f'DyckPath({self.m}, {self.n}, {self.mu})'

    def __str__(self):
        return ''.join(str(x) for x in self.abscissas()) if self.m <= 10 else str(self.abscissas())


def dyck_paths(m, n):
    """
    All (m,n)-Dyck paths, by increasing |μ|
    """

    return [DyckPath(m, n, mu) for mu in subpartitions(staircase(m, n))]


def area(path):
    return path.area


def cat_q(m, n):
    """
    Σ q^{area} over the (m,n)-Dyck paths
    """

    return sum((q**path.area for path in dyck_paths(m, n)), ZERO)


def cat_q_constant_term(m, n):
    """
    The same polynomial read off as an iterated constant term

    Each geometric factor 1/(1 - q z_{k+1}/z_k) is truncated at exponent n + |δ_mn|;
    taking the constant term in z_0, ..., z_m one variable at a time is a transfer over
    the running exponent b_k, which may drop by at most the number of staircase rows
    equal to k.
    """

    rows = staircase_rows(m, n)
    drops = Counter(rows)
    bound = n + sum(rows)
    state = {0: ONE}
    for k in range(m + 1):
        advanced = {}
        for previous, weight in state.items():
            for b in range(max(0, previous - drops.get(k, 0)), bound + 1):
                advanced[b] = advanced.get(b, ZERO) + weight * q**b
        state = advanced
    return state.get(0, ZERO)


def _split_gcd(m, n):
    d = math.gcd(m, n)
    return d, m // d, n // d


def _as_integer(value, what):
    if value.denominator != 1:
        raise QtSymError(f'{what} is not an integer: {value}')
    return int(value)


def bizley_cat(m, n):
    """
    Σ_{μ ⊢ d} (1/z_μ) ∏_k binom(k(a+b), ka)/(a+b)
    """

    d, a, b = _split_gcd(m, n)
    total = Fraction(0)
    for mu in partitions(d):
        term = Fraction(1, z_mu(mu))
        for k in mu:
            term *= Fraction(math.comb(k * (a + b), k * a), a + b)
        total += term
    return _as_integer(total, f'Bizley count for ({m},{n})')


def bizley_park(m, n):
    """
    Σ_{μ ⊢ d} (1/z_μ) binom(n; bμ) ∏_k (ka)^{kb}/a
    """

    d, a, b = _split_gcd(m, n)
    total = Fraction(0)
    for mu in partitions(d):
        term = Fraction(multinomial(n, [b * k for k in mu]), z_mu(mu))
        for k in mu:
            term *= Fraction((k * a)**(k * b), a)
        total += term
    return _as_integer(total, f'Parking count for ({m},{n})')


class ParkingFunction:
    """
    A labelling of the vertical steps of a path by 1..n, increasing up each column

    word[i-1] is the x-position of the step labelled i.
    """

    __slots__ = ('path', 'word')

    def __init__(self, path, word):
        self.path = path
        self.word = tuple(int(x) for x in word)
        if sorted(self.word) != sorted(path.abscissas()):
            raise InvalidShape(f'{self.word} does not label the vertical steps of {path}')

    def steps(self):
        """
        (x, height) of each vertical step, bottom step first
        """

        return [(x, height) for height, x in enumerate(reversed(self.path.abscissas()))]

    def labels(self):
        """
        Map each vertical step (x, height) to its label
        """

        by_column = {}
        for label, x in enumerate(self.word, start=1):
            by_column.setdefault(x, []).append(label)
        result = {}
        for x, height in sorted(self.steps()):
            result[(x, height)] = by_column[x].pop(0)
        return result

    def row_word(self):
        """
        Labels read from the bottom row up
        """

        labels = self.labels()
        return tuple(labels[step] for step in self.steps())

    def __eq__(self, other):
        return isinstance(other, ParkingFunction) and self.path == other.path and self.word == other.word

    def __hash__(self):
        return hash((self.path, self.word))

    def __repr__(self):
        return f'ParkingFunction({self.path!r}, {self})'

    def __str__(self):
        return ''.join(str(x) for x in self.word) if max(self.word, default=0) <= 9 else str(list(self.word))


def parking_enumerate(path):
    """
    Every parking function on the path, as the multiset permutations of its step abscissas
    """

    return [ParkingFunction(path, word) for word in multiset_permutations(sorted(path.abscissas()))]


def parking_count(m, n):
    return sum(path.parking_count() for path in dyck_paths(m, n))


def rank(m, n, x, y):
    """
    mn - nx - my
    """

    return m * n - n * x - m * y


def all_splits(m, n):
    """
    Every ((r,s),(u,v)) with (m,n) = (r,s) + (u,v) and nu - mv = gcd(m,n), 0 < u <= m, 0 <= v < n,
    by decreasing u
    """

    if m < 0 or n < 0 or (m, n) in ((0, 0), (0, 1), (1, 0)):
        raise SplitError(f'({m},{n}) has no split')
    d = math.gcd(m, n)
    found = []
    for u in range(m, 0, -1):
        for v in range(n):
            if n * u - m * v == d:
                found.append(((m - u, n - v), (u, v)))
    if not found:
        raise SplitError(f'({m},{n}) has no split')
    return found


def split(m, n):
    """
    The split whose lattice point (u, v) lies closest below the diagonal
    """

    return all_splits(m, n)[0]


APPLY_CACHE_SIZE = 2048


class EhaOperator:
    """
    Q_mn: a generator (p_1, D_0 or multiplication by π_k) or (1/M)[Q_rs, Q_uv]
    """

    __slots__ = ('left', 'm', 'n', 'right')

    def __init__(self, m, n, left=None, right=None):
        self.m = m
        self.n = n
        self.left = left
        self.right = right

    @property
    def is_generator(self):
        return self.left is None

    def bracket_count(self):
        if self.is_generator:
            return 0
        return 1 + self.left.bracket_count() + self.right.bracket_count()

    def word(self):
        if self.is_generator:
            if (self.m, self.n) == (1, 0):
                return 'D0'
            if (self.m, self.n) == (0, 1):
                return 'p1'
            return f'pi{self.n}'
        return f'[{self.left.word()},{self.right.word()}]'

    def render(self):
        count = self.bracket_count()
        if count == 0:
            return self.word()
        prefix = '1/M' if count == 1 else f'1/M^{count}'
        return f'({prefix}){self.word()}'

    def _apply_generator(self, g):
        if (self.m, self.n) == (1, 0):
            return d0(g)
        if (self.m, self.n) == (0, 1):
            return g * power_sum(1)
        return g * pi_n(self.n)

    def apply(self, g):
        """
        Act on a symmetric function; results are kept in the Schur basis
        """

        if not isinstance(g, SymFunc):
            g = SymFunc.constant(g)
        g = convert(g, 's')
        if self.is_generator:
            return convert(self._apply_generator(g), 's')
        return _apply_bracket(self, frozenset(g.terms.items()))

    def __repr__(self):
        return f'EhaOperator({self.m}, {self.n}, {self.render()!r})'

    def __str__(self):
        return self.render()


@lru_cache(maxsize=APPLY_CACHE_SIZE)
def _apply_bracket(operator, terms):
    """
    (1/M)(LR - RL) applied to the Schur expansion given as frozen terms
    """

    g = SymFunc('s', dict(terms))
    logging.debug('Applying Q_%d%d to %s', operator.m, operator.n, g)
    forward = operator.left.apply(operator.right.apply(g))
    backward = operator.right.apply(operator.left.apply(g))
    return (forward - backward) * scalars.inverse(M)


@lru_cache(maxsize=256)
def q_operator(m, n, choice=0):
    """
    Q_mn, built on the split with the given index in all_splits (0 is the default split)
    """

    if (m, n) in ((1, 0), (0, 1)) or (m == 0 and n > 0):
        return EhaOperator(m, n)
    splits = all_splits(m, n)
    if choice >= len(splits):
        raise SplitError(f'({m},{n}) has only {len(splits)} splits')
    (r, s), (u, v) = splits[choice]
    return EhaOperator(m, n, q_operator(r, s), q_operator(u, v))


def apply(operator, g):
    return operator.apply(g)


def _check_direction(a, b):
    if a < 0 or b < 1 or math.gcd(a, b) != 1:
        raise SplitError(f'Seed direction ({a},{b}) must be a coprime pair with b >= 1')


def seed_operators(mu, a, b):
    """
    The commuting operators Q_{(ak, bk)} for the parts k of μ
    """

    _check_direction(a, b)
    return [q_operator(a * k, b * k) for k in Partition(mu)]


def seed_family(g, a, b):
    """
    g_mn = Σ c_μ Q_{(a,b)μ}(1) for g = Σ c_μ π_μ, with (m,n) = (ad, bd)
    """

    _check_direction(a, b)
    result = SymFunc('s')
    for mu, c in expand_in_pi(g).items():
        value = SymFunc.constant(ONE)
        for operator in seed_operators(mu, a, b):
            value = operator.apply(value)
        result = result + value * c
    return result


def qmn_pi(m, n):
    """
    π_mn = Q_mn(1)
    """

    return q_operator(m, n).apply(ONE)


def e_mn(m, n):
    d = math.gcd(m, n)
    return seed_family(elementary(d), m // d, n // d)


def hat_h_mn(m, n):
    d = math.gcd(m, n)
    return seed_family(hat_h(d), m // d, n // d)


def strip_schur_sum(m, n, weighted=False):
    """
    Σ s_{(μ+1^n)/μ} over the (m,n)-Dyck paths, weighted by q^{area} when asked

    The strip's Schur function is e of its column heights.
    """

    result = SymFunc('e')
    for path in dyck_paths(m, n):
        weight = q**path.area if weighted else ONE
        result = result + path.strip_schur() * weight
    return convert(result, 's')


def strip_schur_formula(m, n):
    """
    Σ_{μ ⊢ d} (1/z_μ) ∏_k (1/a) e_{kb}[ka x]
    """

    d, a, b = _split_gcd(m, n)
    result = SymFunc('p')
    for mu in partitions(d):
        term = SymFunc.constant(scalars.rational(1, z_mu(mu)), 'p')
        for k in mu:
            term = term * plethysm(elementary(k * b), scaled_x(k * a)) * scalars.rational(1, a)
        result = result + term
    return convert(result, 's')


def coprime_strip_formulas(a, b):
    """
    The equivalent closed forms of the strip sum for coprime (a,b), keyed 'a' to 'e'
    """

    if math.gcd(a, b) != 1:
        raise SplitError(f'({a},{b}) is not coprime')
    inv_a = scalars.rational(1, a)
    forms = {'a': plethysm(elementary(b), scaled_x(a)) * inv_a}

    form_b = SymFunc('p')
    form_c = SymFunc('m')
    form_d = SymFunc('s')
    form_e = SymFunc('h')
    for lam in partitions(b):
        length = len(lam)
        sign = (-1)**(b - length)
        form_b = form_b + power_sum(lam) * (inv_a * a**length * scalars.rational(sign, z_mu(lam)))
        form_c = form_c + monomial(lam) * (inv_a * math.prod(math.comb(a, k) for k in lam))
        form_d = form_d + schur(lam) * (inv_a * eval_scalar(schur(lam.conjugate()), a))
        rising = math.prod(range(a + 1, a + length))
        multiplicities = math.prod(math.factorial(c) for c in Counter(lam).values())
        form_e = form_e + homogeneous(lam) * scalars.rational(sign * rising, multiplicities)
    forms.update({'b': form_b, 'c': form_c, 'd': form_d, 'e': form_e})
    return {key: convert(value, 's') for key, value in forms.items()}


_MOLD_44 = {
    (4, ): [()],
    (3, 1): [(1, ), (2, ), (3, )],
    (2, 2): [(2, ), (4, ), (2, 1)],
    (2, 1, 1): [(3, ), (4, ), (5, ), (1, 1), (2, 1), (3, 1)],
    (1, 1, 1, 1): [(6, ), (4, 1), (3, 1), (1, 1, 1)],
}


def mold_e44(alphabet):
    """
    Σ c_λ[A] s_λ(x) with the degree (4,4) coefficients, e.g. A = q gives H_4(q;x)
    and A = q + t gives ∇e_4
    """

    result = SymFunc('s')
    for lam, coefficient_shapes in _MOLD_44.items():
        coefficient = sum((eval_scalar(schur(nu), alphabet) for nu in coefficient_shapes), ZERO)
        result = result + schur(lam) * coefficient
    return result
