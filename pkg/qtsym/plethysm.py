"""
Plethystic substitution f[A]

An alphabet A is any symmetric function: x is p_1, -x is -p_1, q x is q p_1 and a
pure scalar like 1-u or (1-q^k)/(1-q) is a degree zero element. p_k[A] raises every
parameter in the coefficients of A to the k-th power and dilates every p_j to p_{jk}.
"""

import logging
from functools import lru_cache

from sympy.polys.rings import PolyElement, ring

from qtsym import scalars
from qtsym.scalars import DOMAIN, ONE, ZERO, q, t, u
from qtsym.shapes import Partition
from qtsym.symfunc import SymFunc, convert, power_sum, schur


def _as_alphabet(alphabet):
    if isinstance(alphabet, SymFunc):
        return alphabet
    return SymFunc.constant(alphabet, 'p')


def _dilate(alphabet_p, k):
    """
    p_k[A] for A given by its power sum terms
    """

    result = {}
    for lam, c in alphabet_p.items():
        mu = Partition(k * part for part in lam)
        result[mu] = result.get(mu, ZERO) + scalars.adams(c, k)
    return {mu: c for mu, c in result.items() if c}


def _p_multiply(a, b):
    return (SymFunc('p', a) * SymFunc('p', b)).terms


def plethysm(f, alphabet):
    """
    f[A], returned in the basis of f
    """

    alphabet_p = _as_alphabet(alphabet).p_terms()
    images = {}
    result = SymFunc('p')
    for lam, c in f.p_terms().items():
        term = {Partition(): ONE}
        for part in lam:
            if part not in images:
                images[part] = _dilate(alphabet_p, part)
            term = _p_multiply(term, images[part])
        result = result + SymFunc('p', term) * c
    target = f.basis if f.basis != 'pi' else 's'
    return convert(result, target)


def eval_scalar(f, value):
    """
    f[c] for a scalar alphabet c, using p_k[c] = adams(c, k)
    """

    value = scalars.scalar(value)
    total = ZERO
    for lam, c in f.p_terms().items():
        term = c
        for part in lam:
            term = term * scalars.adams(value, part)
        total += term
    return total


def star(f):
    """
    f*(x) = f[x/(1-q)]
    """

    return plethysm(f, x_over(1 - q))


def hook_plethysm_1_minus_u(mu):
    """
    s_μ[1-u]/(1-u): (-u)^k for the hook (n-k, 1^k), zero for every other shape
    """

    value = eval_scalar(schur(mu), 1 - u)
    return scalars.divide_exact(value, 1 - u)


def alphabet_x():
    return power_sum(1)


def minus_x():
    return -power_sum(1)


def scaled_x(factor):
    """
    The alphabet factor·x, e.g. q x or (1-q)(1-t) x
    """

    return power_sum(1) * factor


def x_over(denominator):
    """
    The alphabet x/denominator, e.g. x/(1-q)
    """

    return power_sum(1) * scalars.inverse(denominator)


def x_times_M():
    return scaled_x((1 - q) * (1 - t))


def evaluate_power_sums(f, image):
    """
    Substitute p_k -> image(k) in the power sum expansion of f

    image returns an element of any commutative ring holding Q(q,t,u) scalars, for
    instance the polynomial ring of variable_ring.
    """

    total = None
    powers = {}
    for lam, c in f.p_terms().items():
        term = None
        for part in lam:
            if part not in powers:
                powers[part] = image(part)
            term = powers[part] if term is None else term * powers[part]
        value = c if term is None else term * c
        total = value if total is None else total + value
    return total if total is not None else ZERO


@lru_cache(maxsize=None)
def variable_ring(count, prefix='x'):
    """
    Q(q,t,u)[x1, ..., x_count] and its generators
    """

    names = ','.join(f'{prefix}{i}' for i in range(1, count + 1))
    result = ring(names, DOMAIN)
    return result[0], result[1:]


def evaluate_variables(f, count):
    """
    f(x1, ..., x_count) = f[x1 + ... + x_count] as a polynomial over Q(q,t,u)
    """

    poly_ring, gens = variable_ring(count)
    logging.debug('Evaluating %s in %d variables', f, count)

    def image(k):
        return sum((g**k for g in gens), poly_ring.zero)

    value = evaluate_power_sums(f, image)
    if not (isinstance(value, PolyElement) and value.ring == poly_ring):
        value = poly_ring.ground_new(value)
    return value


def principal_specialization(f, count=None):
    """
    f[1 + q + ... + q^{count-1}], or f[1/(1-q)] when count is None
    """

    if count is None:
        return eval_scalar(f, scalars.inverse(1 - q))
    return eval_scalar(f, sum((q**i for i in range(count)), ZERO))
