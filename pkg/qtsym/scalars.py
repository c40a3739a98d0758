"""
Exact scalars: rationals and the rational function field Q(q,t,u)
"""

import logging
import numbers
from tokenize import TokenError

from sympy import QQ
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import ExactQuotientFailed

from qtsym.errors import DivisionByZero, NonExactDivision, QtSymError, SubstitutionPole

PARAMETERS = ('q', 't', 'u')

FIELD, q, t, u = field(','.join(PARAMETERS), QQ)
RING = FIELD.ring
DOMAIN = FIELD.to_domain()

ZERO = FIELD.zero
ONE = FIELD.one

_TRANSFORMATIONS = standard_transformations + (convert_xor, )


def rational(numerator, denominator=1):
    """
    A reduced rational number with positive denominator
    """

    if denominator == 0:
        raise DivisionByZero(f'rational {numerator}/0')
    return QQ(numerator, denominator)


def is_scalar(value):
    """
    True for elements of Q(q,t,u) itself
    """

    return isinstance(value, FracElement) and value.field == FIELD


def scalar(value):
    """
    Coerce an int, rational, string or field element into Q(q,t,u)
    """

    if is_scalar(value):
        return value
    if isinstance(value, str):
        return parse(value)
    if isinstance(value, bool):
        raise QtSymError(f'Cannot use a boolean as a scalar: {value}')
    if isinstance(value, numbers.Integral):
        return FIELD(int(value))
    if isinstance(value, numbers.Rational):
        return FIELD.ground_new(QQ(value.numerator, value.denominator))
    if QQ.of_type(value):
        return FIELD.ground_new(value)
    try:
        return FIELD(value)
    except (TypeError, ValueError) as exc:
        raise QtSymError(f'Cannot interpret {value!r} as a scalar in Q(q,t,u)') from exc


def arith(a, b, op):
    """
    One of + - * / on two scalars, with a distinct error for division by zero
    """

    a = scalar(a)
    b = scalar(b)
    if op == '+':
        return a + b
    if op in ('-', '−'):
        return a - b
    if op in ('*', '×'):
        return a * b
    if op in ('/', '÷'):
        return divide(a, b)
    raise QtSymError(f'Unknown scalar operation {op}')


def divide(a, b):
    """
    Field division
    """

    b = scalar(b)
    if not b:
        raise DivisionByZero(f'Cannot divide {render(scalar(a))} by zero')
    return scalar(a) / b


def inverse(value):
    """
    Multiplicative inverse
    """

    return divide(ONE, value)


def power(value, exponent):
    """
    Integer power, negative exponents allowed for nonzero values
    """

    value = scalar(value)
    if exponent < 0:
        return inverse(value)**(-exponent)
    return value**exponent


def _evaluate_poly(poly, images):
    total = ZERO
    for monom, coeff in poly.terms():
        term = FIELD.ground_new(coeff)
        for image, exp in zip(images, monom):
            if exp:
                term *= image**exp
        total += term
    return total


def substitute(value, bindings):
    """
    Substitute parameters by scalars, e.g. {'t': 1} or {'t': 1/q}

    Raises SubstitutionPole when the denominator vanishes; callers cancel removable
    poles with divide_exact before specializing.
    """

    value = scalar(value)
    unknown = set(bindings) - set(PARAMETERS)
    if unknown:
        raise QtSymError(f'Unknown parameters in substitution: {", ".join(sorted(unknown))}')

    images = [scalar(bindings[name]) if name in bindings else gen for name, gen in zip(PARAMETERS, FIELD.gens)]
    numer = _evaluate_poly(value.numer, images)
    denom = _evaluate_poly(value.denom, images)
    if not denom:
        spec = ', '.join(f'{k}={render(scalar(v))}' for k, v in sorted(bindings.items()))
        raise SubstitutionPole(f'Substituting {spec} into {render(value)} gives a zero denominator')
    return numer / denom


def _dilate(poly, k):
    return RING.from_dict({tuple(k * e for e in monom): coeff for monom, coeff in poly.terms()})


def adams(value, k):
    """
    Replace every parameter p by p^k
    """

    if k < 1:
        raise QtSymError(f'Adams operation needs k >= 1, got {k}')
    value = scalar(value)
    if k == 1 or is_constant(value):
        return value
    return FIELD.new(_dilate(value.numer, k), _dilate(value.denom, k))


def is_polynomial(value):
    """
    True when the reduced denominator is a constant
    """

    return scalar(value).denom.is_ground


def is_constant(value):
    """
    True for elements of Q
    """

    value = scalar(value)
    return value.numer.is_ground and value.denom.is_ground


def to_rational(value):
    """
    The rational number held by a constant scalar
    """

    value = scalar(value)
    if not is_constant(value):
        raise QtSymError(f'{render(value)} is not a rational constant')
    return QQ.convert(value.numer.LC) / QQ.convert(value.denom.LC) if value else QQ.zero


def to_integer(value):
    """
    The integer held by a constant scalar, failing loudly on a fraction
    """

    number = to_rational(value)
    if number.denominator != 1:
        raise QtSymError(f'Expected an integer, got {number.numerator}/{number.denominator}')
    return int(number.numerator)


def divide_exact(f, g):
    """
    Polynomial quotient f/g, failing when g does not divide f
    """

    f = scalar(f)
    g = scalar(g)
    if not g:
        raise DivisionByZero(f'Cannot divide {render(f)} exactly by zero')
    if not f:
        return ZERO
    if not (is_polynomial(f) and is_polynomial(g)):
        raise NonExactDivision(f'divide_exact needs polynomials, got {render(f)} and {render(g)}')

    numer = f.numer * g.denom
    denom = g.numer * f.denom
    try:
        quotient = numer.exquo(denom)
    except ExactQuotientFailed as exc:
        raise NonExactDivision(f'{render(g)} does not divide {render(f)}') from exc
    return FIELD.new(quotient)


def polynomial_coefficients(value, parameter='q'):
    """
    Coefficients of a polynomial in one parameter, constant term first
    """

    value = scalar(value)
    if not is_polynomial(value):
        raise QtSymError(f'{render(value)} is not a polynomial')
    index = PARAMETERS.index(parameter)
    scale = QQ.one / QQ.convert(value.denom.LC)
    coeffs = {}
    for monom, coeff in value.numer.terms():
        if any(e for i, e in enumerate(monom) if i != index):
            raise QtSymError(f'{render(value)} involves parameters other than {parameter}')
        coeffs[monom[index]] = coeff * scale
    if not coeffs:
        return [QQ.zero]
    return [coeffs.get(k, QQ.zero) for k in range(max(coeffs) + 1)]


def has_nonnegative_integer_coefficients(value):
    """
    Membership in N[q,t,u]
    """

    value = scalar(value)
    if not is_polynomial(value):
        return False
    scale = QQ.one / QQ.convert(value.denom.LC)
    for _, coeff in value.numer.terms():
        coeff = coeff * scale
        if coeff.denominator != 1 or coeff < 0:
            return False
    return True


def _sort_key(monom):
    return (sum(monom), tuple(-e for e in monom))


def _render_monomial(monom):
    factors = []
    for name, exp in zip(PARAMETERS, monom):
        if exp == 1:
            factors.append(name)
        elif exp:
            factors.append(f'{name}^{exp}')
    return '*'.join(factors)


def _render_coefficient(coeff):
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f'{coeff.numerator}/{coeff.denominator}'


def _render_poly(poly):
    pieces = []
    for monom in sorted(poly.keys(), key=_sort_key):
        coeff = QQ.convert(poly[monom])
        sign = '-' if coeff < 0 else '+'
        coeff = -coeff if coeff < 0 else coeff
        mono = _render_monomial(monom)
        if not mono:
            body = _render_coefficient(coeff)
        elif coeff == 1:
            body = mono
        else:
            body = f'{_render_coefficient(coeff)}*{mono}'
        pieces.append((sign, body))

    text = ''
    for idx, (sign, body) in enumerate(pieces):
        if idx == 0:
            text = body if sign == '+' else f'-{body}'
        else:
            text += f'{sign}{body}'
    return text


def render(value):
    """
    Deterministic text form, terms in degree-lex order in q,t,u

    Constant denominators are folded into the coefficients, so polynomials render
    as e.g. 1+2*q+q^2 or 3/2*q; other values render as (numerator)/(denominator).
    """

    value = scalar(value)
    if not value:
        return '0'
    if value.denom.is_ground:
        return _render_poly(value.numer.mul_ground(QQ.one / QQ.convert(value.denom.LC)))
    return f'({_render_poly(value.numer)})/({_render_poly(value.denom)})'


def parse(text):
    """
    Read a scalar written in the rendered syntax
    """

    try:
        expr = parse_expr(text, transformations=_TRANSFORMATIONS, evaluate=True)
        return FIELD.from_expr(expr)
    except (SyntaxError, TokenError, TypeError, ValueError, ZeroDivisionError) as exc:
        logging.debug('Scalar parse failure for %r: %s', text, exc)
        raise QtSymError(f'Cannot read {text!r} as an element of Q(q,t,u)') from exc
