"""
The ring of symmetric functions over Q(q,t,u)

Elements are sparse combinations of basis elements indexed by partitions. Every
conversion and bilinear form goes through the power sum basis, where the Hall
scalar product, ω, skewing and the Kronecker product are all diagonal.
"""

import logging
import math
import re
from collections import Counter
from functools import lru_cache

from sympy import Integer, Matrix, Poly, QQ, symbols
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from qtsym import scalars
from qtsym.errors import BasisError, QtSymError, SingularSystem
from qtsym.scalars import DOMAIN, ONE, ZERO, q, scalar, t
from qtsym.shapes import (
    Partition, conjugate, horizontal_strips, kostka, partitions, render_partition, vertical_strips, z_mu
)

BASES = ('m', 'e', 'h', 'p', 's', 'f', 'pi')

# transition blocks are per degree, single expansions per partition
BLOCK_CACHE_SIZE = 64
EXPANSION_CACHE_SIZE = 4096


def _check_basis(basis):
    if basis not in BASES:
        raise BasisError(f'Unknown basis {basis!r}; expected one of {", ".join(BASES)}')
    return basis


def _union(lam, mu):
    return Partition(sorted(lam + mu, reverse=True))


def _add_into(target, terms, factor=ONE):
    for mu, c in terms.items():
        value = target.get(mu, ZERO) + factor * c
        if value:
            target[mu] = value
        else:
            target.pop(mu, None)
    return target


def _p_product(a, b):
    result = {}
    for lam, c in a.items():
        for mu, d in b.items():
            _add_into(result, {_union(lam, mu): c * d})
    return result


class SymFunc:
    """
    A symmetric function: a basis tag and a map partition -> coefficient
    """

    __slots__ = ('basis', 'terms')

    def __init__(self, basis, terms=None):
        self.basis = _check_basis(basis)
        cleaned = {}
        for mu, c in (terms or {}).items():
            _add_into(cleaned, {Partition(mu): scalar(c)})
        self.terms = cleaned

    @classmethod
    def element(cls, basis, mu, coefficient=ONE):
        return cls(basis, {Partition(mu): coefficient})

    @classmethod
    def constant(cls, value, basis='s'):
        return cls(basis, {Partition(): value})

    @classmethod
    def zero(cls, basis='s'):
        return cls(basis)

    def coefficient(self, mu):
        return self.terms.get(Partition(mu), ZERO)

    def to(self, basis):
        return convert(self, basis)

    def p_terms(self):
        return _p_expansion(self)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, SymFunc):
            return other.to(self.basis)
        return SymFunc.constant(other, self.basis)

    def __add__(self, other):
        other = self._coerce(other)
        return SymFunc(self.basis, _add_into(dict(self.terms), other.terms))

    __radd__ = __add__

    def __neg__(self):
        return SymFunc(self.basis, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = scalar(other)
        return SymFunc(self.basis, {mu: c * v for mu, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, SymFunc):
            raise QtSymError('Division by a symmetric function is not defined')
        return self * scalars.inverse(other)

    def __pow__(self, exponent):
        if exponent < 0:
            raise QtSymError('Negative powers of symmetric functions are not defined')
        result = SymFunc.constant(ONE, self.basis)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymFunc):
            if other.basis == self.basis:
                return self.terms == other.terms
            return _p_expansion(self) == _p_expansion(other)
        if isinstance(other, (int, str)) or QQ.of_type(other) or scalars.is_scalar(other):
            return _p_expansion(self) == SymFunc.constant(other, 'p').terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f'SymFunc({render(self)!r})'

    def __str__(self):
        return render(self)


def element(basis, mu, coefficient=ONE):
    return SymFunc.element(basis, mu, coefficient)


def schur(mu):
    return SymFunc.element('s', mu)


def homogeneous(mu):
    return SymFunc.element('h', mu if not isinstance(mu, int) else (mu, ))


def elementary(mu):
    return SymFunc.element('e', mu if not isinstance(mu, int) else (mu, ))


def power_sum(mu):
    return SymFunc.element('p', mu if not isinstance(mu, int) else (mu, ))


def monomial(mu):
    return SymFunc.element('m', mu)


def forgotten(mu):
    return SymFunc.element('f', mu)


def _h_k(k):
    return {lam: scalar(QQ(1, z_mu(lam))) for lam in partitions(k)}


def _e_k(k):
    return {lam: scalar(QQ((-1)**(k - len(lam)), z_mu(lam))) for lam in partitions(k)}


def _multiplicative(row_for_part, mu):
    result = {Partition(): ONE}
    for part in mu:
        result = _p_product(result, row_for_part(part))
    return result


@lru_cache(maxsize=EXPANSION_CACHE_SIZE)
def _fill_count(parts, bins):
    if not parts:
        return 1 if not any(bins) else 0
    first, rest = parts[0], parts[1:]
    total = 0
    for i, b in enumerate(bins):
        if b >= first:
            total += _fill_count(rest, tuple(sorted(bins[:i] + (b - first, ) + bins[i + 1:], reverse=True)))
    return total


def _invert(rows, domain):
    size = len(rows)
    try:
        inverse = DomainMatrix(rows, (size, size), domain).inv()
    except DMNonInvertibleMatrixError as exc:
        raise SingularSystem('Transition matrix is singular') from exc
    return inverse.to_list()


@lru_cache(maxsize=BLOCK_CACHE_SIZE)
def _monomial_block(degree):
    """
    m_μ in the power sums, by inverting p_λ = Σ_μ #{fillings of μ by the parts of λ} m_μ
    """

    shapes = partitions(degree)
    rows = [[QQ(_fill_count(tuple(lam), tuple(mu))) for mu in shapes] for lam in shapes]
    inverse = _invert(rows, QQ)
    logging.debug('Built monomial transition block of degree %d (%d partitions)', degree, len(shapes))
    return {
        mu: {lam: scalar(inverse[i][j]) for j, lam in enumerate(shapes) if inverse[i][j]}
        for i, mu in enumerate(shapes)
    }


@lru_cache(maxsize=BLOCK_CACHE_SIZE)
def _pi_k(k):
    factor = -1 / (q * t)
    terms = {}
    for j in range(1, k + 1):
        hook = Partition((j, ) + (1, ) * (k - j))
        _add_into(terms, _in_p('s', hook), factor**(j - 1))
    return terms


@lru_cache(maxsize=EXPANSION_CACHE_SIZE)
def _in_p(basis, mu):
    """
    The power sum expansion of one basis element
    """

    mu = Partition(mu)
    if basis == 'p':
        return {mu: ONE}
    if basis == 'h':
        return _multiplicative(_h_k, mu)
    if basis == 'e':
        return _multiplicative(_e_k, mu)
    if basis == 'm':
        return dict(_monomial_block(mu.size)[mu])
    if basis == 's':
        terms = {}
        for nu in partitions(mu.size):
            count = kostka(mu, nu)
            if count:
                _add_into(terms, _in_p('m', nu), scalar(count))
        return terms
    if basis == 'f':
        return _omega_p(_in_p('m', mu))
    if basis == 'pi':
        return _multiplicative(_pi_k, mu)
    raise BasisError(f'Unknown basis {basis!r}')


@lru_cache(maxsize=BLOCK_CACHE_SIZE)
def _from_p_block(basis, degree):
    """
    p_λ in the target basis, the inverse of the target-in-p block
    """

    shapes = partitions(degree)
    expansions = [_in_p(basis, mu) for mu in shapes]
    if basis == 'pi':
        rows = [[exp.get(lam, ZERO) for lam in shapes] for exp in expansions]
        inverse = _invert(rows, DOMAIN)
    else:
        rows = [[scalars.to_rational(exp.get(lam, ZERO)) for lam in shapes] for exp in expansions]
        inverse = _invert(rows, QQ)
    logging.debug('Built p -> %s transition block of degree %d', basis, degree)
    # inverse[λ][μ] is the coefficient of target_μ in p_λ
    return {
        lam: {mu: scalar(inverse[j][i]) for i, mu in enumerate(shapes) if inverse[j][i]}
        for j, lam in enumerate(shapes)
    }


def _p_expansion(f):
    if f.basis == 'p':
        return dict(f.terms)
    result = {}
    for mu, c in f.terms.items():
        _add_into(result, _in_p(f.basis, mu), c)
    return result


def _from_p(terms, basis):
    if basis == 'p':
        return SymFunc('p', terms)
    result = {}
    for lam, c in terms.items():
        _add_into(result, _from_p_block(basis, lam.size)[lam], c)
    return SymFunc(basis, result)


def convert(f, target):
    """
    Rewrite f in the target basis
    """

    _check_basis(target)
    if f.basis == target:
        return f
    return _from_p(_p_expansion(f), target)


def multiply(f, g):
    """
    Product, kept in the basis of f
    """

    if f.basis == g.basis and f.basis in ('e', 'h', 'p', 'pi'):
        result = {}
        for lam, c in f.terms.items():
            for mu, d in g.terms.items():
                _add_into(result, {_union(lam, mu): c * d})
        return SymFunc(f.basis, result)
    return _from_p(_p_product(_p_expansion(f), _p_expansion(g)), f.basis)


def hall(f, g):
    """
    Hall scalar product, <p_λ, p_μ> = z_λ δ_λμ
    """

    if f.basis == g.basis == 's':
        return sum((c * g.terms[mu] for mu, c in f.terms.items() if mu in g.terms), ZERO)
    fp = _p_expansion(f)
    gp = _p_expansion(g)
    return sum((c * gp[lam] * z_mu(lam) for lam, c in fp.items() if lam in gp), ZERO)


def _omega_p(terms):
    return {lam: (c if (lam.size - len(lam)) % 2 == 0 else -c) for lam, c in terms.items()}


def omega(f):
    """
    The involution p_k -> (-1)^{k-1} p_k
    """

    if f.basis == 's':
        return SymFunc('s', {conjugate(mu): c for mu, c in f.terms.items()})
    swap = {'h': 'e', 'e': 'h', 'm': 'f', 'f': 'm'}
    if f.basis in swap:
        return convert(SymFunc(swap[f.basis], f.terms), f.basis)
    return _from_p(_omega_p(_p_expansion(f)), f.basis)


def _derive(lam, mu):
    """
    p_λ^⊥ p_μ: the coefficient and the remaining partition, or None
    """

    need = Counter(lam)
    have = Counter(mu)
    factor = 1
    for k, a in need.items():
        b = have.get(k, 0)
        if b < a:
            return None
        factor *= k**a * math.factorial(b) // math.factorial(b - a)
        have[k] = b - a
    rest = Partition(sorted(have.elements(), reverse=True))
    return factor, rest


def skew(f, g):
    """
    f^⊥ g, the adjoint of multiplication by f
    """

    fp = _p_expansion(f)
    gp = _p_expansion(g)
    result = {}
    for lam, c in fp.items():
        for mu, d in gp.items():
            derived = _derive(lam, mu)
            if derived is not None:
                factor, rest = derived
                _add_into(result, {rest: c * d * factor})
    return _from_p(result, g.basis)


def kronecker(f, g):
    """
    Internal product, p_λ * p_μ = z_λ δ_λμ p_λ
    """

    fp = _p_expansion(f)
    gp = _p_expansion(g)
    result = {lam: c * gp[lam] * z_mu(lam) for lam, c in fp.items() if lam in gp}
    return _from_p(result, f.basis)


def _h_symbols(size):
    return symbols(f'h1:{size + 1}') if size > 0 else ()


def _determinant_in_basis(matrix, gens, basis):
    """
    Expand a determinant whose entries are polynomials in h_1.. (or e_1..) into that basis
    """

    det = matrix.det(method='berkowitz').expand()
    if not gens:
        return SymFunc.constant(scalar(int(det)), basis)
    poly = Poly(det, *gens)
    terms = {}
    for monom, coeff in poly.terms():
        parts = []
        for k, exp in enumerate(monom, start=1):
            parts.extend([k] * exp)
        _add_into(terms, {Partition(sorted(parts, reverse=True)): scalar(QQ(int(coeff.p), int(coeff.q)))})
    return SymFunc(basis, terms)


def _symbol_matrix(entry, size, gens):
    def value(k):
        if k == 0:
            return Integer(1)
        if k < 0 or k > len(gens):
            return Integer(0)
        return gens[k - 1]

    return Matrix(size, size, lambda i, j: entry(i, j, value))


def jacobi_trudi(mu, dual=False):
    """
    det(h_{μ_i - i + j}), or det(e_{μ'_i - i + j}) when dual
    """

    mu = Partition(mu)
    index = conjugate(mu) if dual else mu
    basis = 'e' if dual else 'h'
    if not index:
        return SymFunc.constant(ONE, basis)
    gens = _h_symbols(mu.size)
    matrix = _symbol_matrix(lambda i, j, value: value(index[i] - i + j), len(index), gens)
    return _determinant_in_basis(matrix, gens, basis)


def hankel(size, shift):
    """
    det(h_{i+j+shift}) for 0 <= i, j < size
    """

    top = 2 * (size - 1) + shift
    gens = _h_symbols(top)
    matrix = _symbol_matrix(lambda i, j, value: value(i + j + shift), size, gens)
    return _determinant_in_basis(matrix, gens, 'h')


def p_in_h_determinant(k):
    """
    p_k as (-1)^{k-1} times the determinant of the Newton system in the h's
    """

    gens = _h_symbols(k)

    def entry(i, j, value):
        if j == 0:
            return (i + 1) * value(i + 1)
        return value(i - j + 1)

    matrix = _symbol_matrix(entry, k, gens)
    return _determinant_in_basis(matrix, gens, 'h') * (-1)**(k - 1)


def pieri_h(k, mu):
    """
    s_μ h_k as a sum over horizontal strips
    """

    return SymFunc('s', {theta: ONE for theta in horizontal_strips(Partition(mu), k)})


def pieri_e(k, mu):
    """
    s_μ e_k as a sum over vertical strips
    """

    return SymFunc('s', {theta: ONE for theta in vertical_strips(Partition(mu), k)})


def _apply_h_word(terms, word):
    for k in word:
        nxt = {}
        for mu, c in terms.items():
            for theta in horizontal_strips(mu, k):
                _add_into(nxt, {theta: c})
        terms = nxt
    return terms


def schur_product(mu, nu):
    """
    s_μ s_ν by iterated Pieri rules on the Jacobi-Trudi expansion of s_ν
    """

    result = {}
    for alpha, c in jacobi_trudi(nu).terms.items():
        _add_into(result, _apply_h_word({Partition(mu): ONE}, alpha), c)
    return SymFunc('s', result)


def lr_coefficient(mu, nu, lam):
    """
    Littlewood-Richardson coefficient <s_μ s_ν, s_λ>
    """

    if Partition(lam).size != Partition(mu).size + Partition(nu).size:
        return 0
    return scalars.to_integer(schur_product(mu, nu).coefficient(lam))


def skew_schur(lam, mu):
    """
    s_{λ/μ} = s_μ^⊥ s_λ
    """

    return skew(schur(mu), schur(lam))


def pi_n(k):
    """
    Σ_{j=1..k} (-1/qt)^{j-1} s_{(j, 1^{k-j})}
    """

    if k < 1:
        raise QtSymError(f'pi_n needs k >= 1, got {k}')
    factor = -1 / (q * t)
    return SymFunc('s', {(j, ) + (1, ) * (k - j): factor**(j - 1) for j in range(1, k + 1)})


def expand_in_pi(f):
    """
    Coefficients of f in the basis π_μ = π_{μ_1} π_{μ_2} ...
    """

    return dict(convert(f, 'pi').terms)


def is_schur_positive(f):
    """
    (True, None) when every Schur coefficient is in N[q,t,u], else (False, (λ, coefficient))
    """

    for mu, c in sorted(convert(f, 's').terms.items(), key=lambda kv: _term_key(kv[0])):
        if not scalars.has_nonnegative_integer_coefficients(c):
            return False, (mu, c)
    return True, None


def transition_matrix(degree, source, target):
    """
    Row λ holds source_λ expanded in the target basis; rows and columns follow partitions(degree)
    """

    shapes = partitions(degree)
    rows = []
    for lam in shapes:
        image = convert(SymFunc.element(source, lam), target)
        rows.append([image.coefficient(mu) for mu in shapes])
    return rows


def degrees(f):
    return sorted({mu.size for mu in f.terms})


def degree_component(f, degree):
    if f.basis == 'pi':
        f = convert(f, 's')
    return SymFunc(f.basis, {mu: c for mu, c in f.terms.items() if mu.size == degree})


def is_homogeneous(f):
    return len(degrees(f)) <= 1


def map_coefficients(f, function):
    """
    Apply a scalar map to every coefficient; π expansions go through s first since π depends on q,t
    """

    if f.basis == 'pi':
        f = convert(f, 's')
    return SymFunc(f.basis, {mu: function(c) for mu, c in f.terms.items()})


def _term_key(mu):
    return (mu.size, tuple(-p for p in mu))


def _wrap_coefficient(c):
    text = scalars.render(c)
    if scalars.is_constant(c):
        return text
    return f'({text})'


def render(f):
    """
    Canonical text such as (q^2+q)*s[2,1]-3*h[2]+1
    """

    if not f.terms:
        return '0'
    pieces = []
    for mu in sorted(f.terms, key=_term_key):
        c = f.terms[mu]
        negative = scalars.is_constant(c) and scalars.to_rational(c) < 0
        magnitude = -c if negative else c
        index = f'{f.basis}[{",".join(str(p) for p in mu)}]'
        if not mu:
            body = _wrap_coefficient(magnitude)
        elif magnitude == 1:
            body = index
        else:
            body = f'{_wrap_coefficient(magnitude)}*{index}'
        pieces.append(('-' if negative else '+', body))

    sign, body = pieces[0]
    text = body if sign == '+' else f'-{body}'
    for sign, body in pieces[1:]:
        text += f'{sign}{body}'
    return text


_INDEX = re.compile(r'^(pi|[mehpsf])\[([0-9,\s]*)\]$')


def _split_terms(text):
    terms = []
    depth = 0
    start = 0
    previous = ''
    for idx, char in enumerate(text):
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
        elif char in '+-' and depth == 0 and idx > start and previous not in '*/^':
            terms.append(text[start:idx])
            start = idx
        if not char.isspace():
            previous = char
    terms.append(text[start:])
    return [term.strip() for term in terms if term.strip()]


def _split_coefficient(body):
    depth = 0
    for idx in range(len(body) - 1, -1, -1):
        char = body[idx]
        if char in ')]':
            depth += 1
        elif char in '([':
            depth -= 1
        elif char == '*' and depth == 0:
            return body[:idx], body[idx + 1:]
    return None, body


def parse(text):
    """
    Read the canonical text form back into a SymFunc
    """

    result = None
    for term in _split_terms(text.replace(' ', '')):
        sign = ONE
        if term[0] in '+-':
            sign = -ONE if term[0] == '-' else ONE
            term = term[1:]
        coefficient, index = _split_coefficient(term)
        match = _INDEX.match(index)
        if match:
            basis, parts = match.groups()
            mu = Partition(tuple(int(p) for p in parts.split(',') if p.strip()))
            value = sign * (scalars.parse(coefficient) if coefficient else ONE)
            piece = SymFunc.element(basis, mu, value)
        else:
            piece = SymFunc.constant(sign * scalars.parse(term))
        result = piece if result is None else result + piece
    if result is None:
        raise QtSymError(f'Cannot read a symmetric function from {text!r}')
    return result


def label(f):
    """
    Short human label of a single basis element, e.g. s21
    """

    if len(f.terms) != 1:
        return render(f)
    (mu, c), = f.terms.items()
    return f'{f.basis}{render_partition(mu)}' if c == 1 else render(f)
