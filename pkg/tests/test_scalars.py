from fractions import Fraction

from hypothesis import (
    given,
    strategies as st,
)
import pytest

from qtsym import scalars
from qtsym.errors import DivisionByZero, NonExactDivision, QtSymError, SubstitutionPole
from qtsym.scalars import ONE, ZERO, q, t, u

small_coefficients = st.lists(st.integers(min_value=-5, max_value=5), max_size=5)


def _poly(coefficients, gen):
    return sum((c * gen**i for i, c in enumerate(coefficients)), ZERO)


def test_scalar_coercion():
    assert scalars.scalar(3) == 3 * ONE
    assert scalars.scalar(Fraction(1, 2)) * 2 == ONE
    assert scalars.scalar('q+1') == q + 1
    assert scalars.scalar(q) == q

    with pytest.raises(QtSymError, match='boolean'):
        scalars.scalar(True)


def test_is_scalar():
    assert scalars.is_scalar(q + t)
    assert scalars.is_scalar(ONE)
    assert not scalars.is_scalar(3)
    assert not scalars.is_scalar(Fraction(1, 2))
    assert not scalars.is_scalar(scalars.RING.gens[0])


def test_render_polynomials():
    assert scalars.render(ZERO) == '0'
    assert scalars.render(1 + 2 * q + q**2) == '1+2*q+q^2'
    assert scalars.render(q * 3 / 2) == '3/2*q'
    assert scalars.render(-q) == '-q'
    assert scalars.render(q - t) == 'q-t'
    assert scalars.render(q * t**2 * u) == 'q*t^2*u'


@given(small_coefficients, small_coefficients, st.integers(min_value=1, max_value=6))
def test_render_parse_roundtrip(q_coefficients, t_coefficients, denominator):
    value = (_poly(q_coefficients, q) + _poly(t_coefficients, t)) / denominator

    assert scalars.parse(scalars.render(value)) == value


def test_render_parse_roundtrip_rational_function():
    value = (1 + q) / (1 - t)

    assert scalars.parse(scalars.render(value)) == value
    assert scalars.parse('1/(1-q)') * (1 - q) == ONE
    assert scalars.parse('q^2 + 1/2') == q**2 + ONE / 2


def test_parse_failures():
    with pytest.raises(QtSymError, match='Cannot read'):
        scalars.parse('(')

    with pytest.raises(QtSymError, match='Cannot read'):
        scalars.parse('x + 1')


def test_division():
    assert scalars.divide(q, t) * t == q
    assert scalars.power(q, -2) * q**2 == ONE
    assert scalars.arith(q, t, '*') == q * t

    with pytest.raises(DivisionByZero):
        scalars.divide(q, 0)

    with pytest.raises(DivisionByZero):
        scalars.inverse(ZERO)

    with pytest.raises(DivisionByZero):
        scalars.arith(q, 0, '/')

    with pytest.raises(QtSymError, match='Unknown scalar operation'):
        scalars.arith(q, t, '%')


def test_substitute():
    assert scalars.substitute(q + t, {'t': 1}) == q + 1
    assert scalars.substitute(q * t, {'t': 1 / q}) == ONE
    assert scalars.substitute((1 - q**2) / (1 - t), {'q': 2, 't': 3}) == ONE * 3 / 2

    with pytest.raises(SubstitutionPole, match='zero denominator'):
        scalars.substitute(1 / (1 - q), {'q': 1})

    with pytest.raises(QtSymError, match='Unknown parameters'):
        scalars.substitute(q, {'x': 1})


def test_adams():
    assert scalars.adams(q + t, 2) == q**2 + t**2
    assert scalars.adams(1 / (1 - q), 3) == 1 / (1 - q**3)
    assert scalars.adams(scalars.scalar(5), 4) == 5 * ONE

    with pytest.raises(QtSymError, match='k >= 1'):
        scalars.adams(q, 0)


def test_exact_division():
    assert scalars.divide_exact(q**2 - 1, q - 1) == q + 1
    assert scalars.divide_exact(ZERO, q) == ZERO

    with pytest.raises(NonExactDivision):
        scalars.divide_exact(q**2, q - 1)

    with pytest.raises(DivisionByZero):
        scalars.divide_exact(q, 0)


def test_constants():
    assert scalars.is_constant(scalars.scalar(5))
    assert not scalars.is_constant(q)
    assert scalars.is_polynomial((q**2 - 1) / (q - 1))
    assert not scalars.is_polynomial(1 / (1 - q))
    assert scalars.to_integer(scalars.scalar(7)) == 7
    assert scalars.to_rational(ONE / 2) == scalars.rational(1, 2)

    with pytest.raises(QtSymError, match='Expected an integer'):
        scalars.to_integer(ONE / 2)

    with pytest.raises(QtSymError, match='not a rational constant'):
        scalars.to_rational(q)


def test_polynomial_coefficients():
    assert scalars.polynomial_coefficients(1 + 2 * q + q**3) == [1, 2, 0, 1]
    assert scalars.polynomial_coefficients(t**2, 't') == [0, 0, 1]

    with pytest.raises(QtSymError, match='other than q'):
        scalars.polynomial_coefficients(q * t)


def test_nonnegative_integer_coefficients():
    assert scalars.has_nonnegative_integer_coefficients((1 + q)**2)
    assert scalars.has_nonnegative_integer_coefficients(q * t + u)
    assert not scalars.has_nonnegative_integer_coefficients(1 - q)
    assert not scalars.has_nonnegative_integer_coefficients(q / 2)
    assert not scalars.has_nonnegative_integer_coefficients(1 / (1 - q))
