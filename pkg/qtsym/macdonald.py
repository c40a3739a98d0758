"""
Macdonald polynomials and the operators they diagonalize

H_μ is the modified Macdonald polynomial, characterized by triangularity of
H_μ[x(1-q)] and H_μ[x(1-t)] together with <H_μ, s_n> = 1. Δ_f, ∇ and D_0 act on
H_μ by the scalars f[B_μ], T_μ and 1 - M B_μ.
"""

import logging
import math
import threading

from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from qtsym import scalars
from qtsym.errors import QtSymError, SingularSystem, SizeMismatch
from qtsym.plethysm import eval_scalar, plethysm, star, x_over
from qtsym.scalars import DOMAIN, ONE, ZERO, q, t
from qtsym.shapes import (
    Partition, cell_data, cells, conjugate, dominates, n_mu, partitions, qt_integer, riser_sequence, subpartitions,
    z_mu
)
from qtsym.symfunc import SymFunc, convert, degree_component, degrees, elementary, homogeneous, schur

M = (1 - q) * (1 - t)

DEFAULT_MAX_DEGREE = 6


def B_mu(mu):
    """
    Σ q^x t^y over the cells (x, y) of μ
    """

    return sum((q**x * t**y for x, y in cells(mu)), ZERO)


def T_mu(mu):
    """
    q^{n(μ')} t^{n(μ)}
    """

    mu = Partition(mu)
    return q**n_mu(conjugate(mu)) * t**n_mu(mu)


def Pi_mu(mu):
    """
    ∏ (1 - q^x t^y) over the cells other than (0, 0)
    """

    return math.prod((1 - q**x * t**y for x, y in cells(mu) if (x, y) != (0, 0)), start=ONE)


def w_mu(mu):
    """
    ∏ (q^a - t^{l+1})(t^l - q^{a+1}) over the cells, with arm a and leg l
    """

    return math.prod(((q**d.arm - t**(d.leg + 1)) * (t**d.leg - q**(d.arm + 1)) for d in cell_data(mu).values()), start=ONE)


def _p_weight(lam, factor):
    return math.prod((factor(part) for part in lam), start=ONE)


def qt_scalar(f, g):
    """
    <p_λ, p_μ>_{q,t} = δ_λμ z_λ ∏ (1 - q^{λ_i})/(1 - t^{λ_i})
    """

    fp = f.p_terms()
    gp = g.p_terms()
    return sum((c * gp[lam] * z_mu(lam) * _p_weight(lam, lambda k: (1 - q**k) / (1 - t**k)) for lam, c in fp.items() if lam in gp), ZERO)


def star_scalar(f, g):
    """
    <p_λ, p_μ>_* = δ_λμ (-1)^{|λ|-ℓ(λ)} z_λ p_λ[(1-q)(1-t)]
    """

    fp = f.p_terms()
    gp = g.p_terms()
    total = ZERO
    for lam, c in fp.items():
        if lam in gp:
            sign = -1 if (lam.size - len(lam)) % 2 else 1
            total += sign * c * gp[lam] * z_mu(lam) * _p_weight(lam, lambda k: (1 - q**k) * (1 - t**k))
    return total


class MacdonaldCache:
    """
    Per-degree H_μ and P_μ bases, with the inverse change of basis from Schur functions
    """

    def __init__(self, max_degree=DEFAULT_MAX_DEGREE):
        self.max_degree = max_degree
        self._lock = threading.Lock()
        self._h_bases = {}
        self._h_inverses = {}
        self._p_bases = {}

    def _check_degree(self, degree):
        if degree > self.max_degree:
            raise QtSymError(f'Degree {degree} is above the Macdonald cache ceiling {self.max_degree}; raise it with --max-degree')

    def _store(self, table, degree, value):
        with self._lock:
            return table.setdefault(degree, value)

    def h_basis(self, degree):
        """
        μ -> H_μ in the Schur basis
        """

        basis = self._h_bases.get(degree)
        if basis is None:
            self._check_degree(degree)
            basis = self._store(self._h_bases, degree, _solve_h_basis(degree))
        return basis

    def h_inverse(self, degree):
        """
        λ -> {μ: c} with s_λ = Σ c H_μ
        """

        inverse = self._h_inverses.get(degree)
        if inverse is None:
            shapes = partitions(degree)
            basis = self.h_basis(degree)
            rows = [[basis[mu].coefficient(lam) for lam in shapes] for mu in shapes]
            try:
                inv = DomainMatrix(rows, (len(shapes), len(shapes)), DOMAIN).inv().to_list()
            except DMNonInvertibleMatrixError as exc:
                raise SingularSystem(f'H basis of degree {degree} is not invertible', degree=degree) from exc
            inverse = {lam: {mu: inv[i][j] for j, mu in enumerate(shapes) if inv[i][j]} for i, lam in enumerate(shapes)}
            inverse = self._store(self._h_inverses, degree, inverse)
        return inverse

    def p_basis(self, degree):
        """
        μ -> P_μ in the monomial basis
        """

        basis = self._p_bases.get(degree)
        if basis is None:
            self._check_degree(degree)
            basis = self._store(self._p_bases, degree, _gram_schmidt_p(degree))
        return basis

    def clear(self):
        with self._lock:
            self._h_bases.clear()
            self._h_inverses.clear()
            self._p_bases.clear()


CACHE = MacdonaldCache()


def set_max_degree(degree):
    """
    Move the ceiling above which H bases are refused
    """

    logging.debug('Macdonald cache ceiling set to %d', degree)
    CACHE.max_degree = degree


def _gram_schmidt_p(degree):
    order = list(reversed(partitions(degree)))
    done = []
    basis = {}
    for mu in order:
        m_mu = SymFunc.element('m', mu)
        f = m_mu
        for p_nu, norm in done:
            f = f - p_nu * (qt_scalar(m_mu, p_nu) / norm)
        done.append((f, qt_scalar(f, f)))
        basis[mu] = convert(f, 'm')
    logging.debug('Built P basis of degree %d', degree)
    return basis


def _plethysm_matrix(degree, factor):
    """
    Row λ, column ν: <s_λ, s_ν[x(1 - factor)]>
    """

    shapes = partitions(degree)
    columns = {}
    for nu in shapes:
        image = plethysm(schur(nu), SymFunc.element('p', (1, ), 1 - factor))
        columns[nu] = convert(image, 's')
    return [[columns[nu].coefficient(lam) for nu in shapes] for lam in shapes]


def _solve_h_basis(degree):
    shapes = partitions(degree)
    if degree == 0:
        return {Partition(): SymFunc.constant(ONE)}

    size = len(shapes)
    by_q = _plethysm_matrix(degree, q)
    by_t = _plethysm_matrix(degree, t)
    basis = {}
    for mu in shapes:
        mu_c = conjugate(mu)
        rows = []
        for i, lam in enumerate(shapes):
            if not dominates(lam, mu):
                rows.append(by_q[i] + [ZERO])
            if not dominates(lam, mu_c):
                rows.append(by_t[i] + [ZERO])
        rows.append([ONE if nu == shapes[0] else ZERO for nu in shapes] + [ONE])

        reduced, pivots = DomainMatrix(rows, (len(rows), size + 1), DOMAIN).rref()
        if size in pivots or len(pivots) != size:
            raise SingularSystem(f'H_{mu} is not determined by its triangularity system', degree=degree, partition=mu)
        solution = reduced.to_list()
        coefficients = {}
        for row, col in enumerate(pivots):
            value = solution[row][size]
            if not scalars.has_nonnegative_integer_coefficients(value) and value:
                raise QtSymError(f'Coefficient of s_{shapes[col]} in H_{mu} is not in N[q,t]: {scalars.render(value)}')
            coefficients[shapes[col]] = value
        basis[mu] = SymFunc('s', coefficients)

    logging.debug('Built H basis of degree %d (%d partitions)', degree, size)
    return basis


def macdonald_H(mu):
    mu = Partition(mu)
    return CACHE.h_basis(mu.size)[mu]


def macdonald_P(mu):
    mu = Partition(mu)
    return CACHE.p_basis(mu.size)[mu]


def macdonald_H_from_P(mu):
    """
    t^{n(μ)} J_μ(q, 1/t)[x/(1 - 1/t)] with J_μ = ∏ (1 - q^a t^{l+1}) P_μ
    """

    mu = Partition(mu)
    c_mu = math.prod((1 - q**d.arm * t**(d.leg + 1) for d in cell_data(mu).values()), start=ONE)
    j_mu = macdonald_P(mu) * c_mu
    inverted = SymFunc(j_mu.basis, {lam: scalars.substitute(c, {'t': 1 / t}) for lam, c in j_mu.terms.items()})
    return convert(plethysm(inverted, x_over(1 - 1 / t)) * t**n_mu(mu), 's')


def qt_kostka(lam, mu):
    """
    K_λμ(q,t) = <H_μ, s_λ>
    """

    lam = Partition(lam)
    mu = Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f'q,t-Kostka polynomial needs |λ| = |μ|, got {lam} and {mu}')
    return macdonald_H(mu).coefficient(lam)


def expand_in_H(f):
    """
    Coefficients of a homogeneous f in the H_μ basis
    """

    f = convert(f, 's')
    found = degrees(f)
    if len(found) > 1:
        raise QtSymError(f'expand_in_H needs a homogeneous function, got degrees {found}')
    if not found:
        return {}
    inverse = CACHE.h_inverse(found[0])
    result = {}
    for lam, c in f.terms.items():
        for mu, d in inverse[lam].items():
            result[mu] = result.get(mu, ZERO) + c * d
    return {mu: c for mu, c in result.items() if c}


def _eigen_map(g, eigenvalue):
    target = g.basis if g.basis != 'pi' else 's'
    g = convert(g, 's')
    result = SymFunc('s')
    for degree in degrees(g):
        for mu, c in expand_in_H(degree_component(g, degree)).items():
            result = result + macdonald_H(mu) * (c * eigenvalue(mu))
    return convert(result, target)


def apply_eigen(operator, g, power=1, f=None):
    """
    Apply one of delta, nabla, delta_f or d0 through the H basis
    """

    if operator == 'delta':
        return _eigen_map(g, B_mu)
    if operator == 'nabla':
        return _eigen_map(g, lambda mu: scalars.power(T_mu(mu), power))
    if operator == 'delta_f':
        if f is None:
            raise QtSymError('delta_f needs the function f')
        return _eigen_map(g, lambda mu: eval_scalar(f, B_mu(mu)))
    if operator == 'd0':
        return _eigen_map(g, lambda mu: 1 - M * B_mu(mu))
    raise QtSymError(f'Unknown eigenoperator {operator!r}')


def nabla(g, power=1):
    return apply_eigen('nabla', g, power=power)


def delta(g):
    return apply_eigen('delta', g)


def delta_f(f, g):
    return apply_eigen('delta_f', g, f=f)


def d0(g):
    return apply_eigen('d0', g)


def _star_diagonal(g, basis, eigenvalue):
    """
    Act diagonally on the basis b_μ* = b_μ[x/(1-q)]
    """

    target = g.basis if g.basis != 'pi' else 's'
    unstarred = convert(plethysm(g, SymFunc.element('p', (1, ), 1 - q)), basis)
    scaled = SymFunc(basis, {mu: c * eigenvalue(mu) for mu, c in unstarred.terms.items()})
    return convert(star(scaled), target)


def nabla_t1(g):
    """
    ∇ at t = 1, diagonal on h_μ* with eigenvalue q^{n(μ')}
    """

    return _star_diagonal(g, 'h', lambda mu: q**n_mu(conjugate(mu)))


def nabla_t_1overq(g):
    """
    ∇ at t = 1/q, diagonal on s_μ* with eigenvalue q^{n(μ') - n(μ)}
    """

    return _star_diagonal(g, 's', lambda mu: scalars.power(q, n_mu(conjugate(mu)) - n_mu(mu)))


def iota(mu):
    """
    Σ_i max(μ_i - i, 0) with 1-based row index i
    """

    return sum(max(part - i, 0) for i, part in enumerate(Partition(mu), start=1))


def hat_s(mu):
    """
    (-1/qt)^{ι(μ)} s_μ
    """

    return schur(mu) * scalars.power(-1 / (q * t), iota(mu))


def hat_h(degree):
    return hat_s((degree, ))


def e_q_coefficients(order):
    """
    Coefficients of e_q(z) = Σ (-z)^n q^{n^2}/(q;q)_n through z^order
    """

    coefficients = []
    pochhammer = ONE
    for k in range(order + 1):
        if k:
            pochhammer *= 1 - q**k
        coefficients.append((-1)**k * q**(k * k) / pochhammer)
    return coefficients


def _series_divide(numerator, denominator, order):
    result = []
    for k in range(order + 1):
        value = numerator[k] - sum((denominator[j] * result[k - j] for j in range(1, k + 1)), ZERO)
        result.append(value / denominator[0])
    return result


def F_series(order):
    """
    Coefficients F_0, ..., F_order of F(q;z) = e_q(z)/e_q(z/q)
    """

    e_q = e_q_coefficients(order)
    shifted = [c * scalars.power(q, -k) for k, c in enumerate(e_q)]
    return _series_divide(e_q, shifted, order)


def F_difference_holds(order):
    """
    Check F(q;z) = 1/(1 - z F(q;qz)) through z^order, the same as F(q;z/q) = 1/(1 - (z/q) F(q;z))

    Without the 1/q on the right the two sides already differ at z^1. The
    coefficients F_n are then q_catalan_area(n).
    """

    coefficients = F_series(order)
    denominator = [ONE] + [-(q**(k - 1)) * coefficients[k - 1] for k in range(1, order + 1)]
    expected = _series_divide([ONE] + [ZERO] * order, denominator, order)
    return expected == coefficients


def riser_sum(size):
    """
    Σ q^{area} e_{ρ(μ)} over μ inside the staircase (size-1, ..., 1, 0), area = |staircase| - |μ|

    e_{ρ(μ)} is the Schur function of the vertical strip (μ + 1^size)/μ.
    """

    staircase = Partition(range(size - 1, 0, -1))
    result = SymFunc('e')
    for mu in subpartitions(staircase):
        heights = Partition(sorted((h for h in riser_sequence(mu, size) if h), reverse=True))
        result = result + elementary(heights) * q**(staircase.size - mu.size)
    return convert(result, 's')


def delta_e_n_formula(size):
    """
    Σ_{k=1..n} [k]_{q,t} e_{n-k} e_k
    """

    result = SymFunc('e')
    for k in range(1, size + 1):
        result = result + elementary(sorted((k, size - k), reverse=True)) * qt_integer(k)
    return convert(result, 's')


def hn_over_hn_star(size):
    """
    h_n*(x) / h_n*(1)
    """

    h_star = star(homogeneous(size))
    return convert(h_star, 's') * scalars.inverse(eval_scalar(h_star, 1))

