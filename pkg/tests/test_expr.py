import pytest

from qtsym import expr, scalars
from qtsym.errors import DivisionByZero, ParseError
from qtsym.scalars import q, t
from qtsym.symfunc import SymFunc, elementary, schur


def _value(text):
    return expr.evaluate(expr.parse(text))


def test_tokenize():
    tokens = expr.tokenize('s[2,1]\n+ q')

    assert [token.kind for token in tokens] == ['name', 'op', 'number', 'op', 'number', 'op', 'op', 'name', 'eof']
    assert (tokens[-2].line, tokens[-2].column) == (2, 3)


@pytest.mark.parametrize('text, canonical', [
    ('s[2,1] + q*e[2]', 's[2,1]+q*e[2]'),
    ('(s[1]+s[2])*h[1]', '(s[1]+s[2])*h[1]'),
    ('q-(t-u)', 'q-(t-u)'),
    ('(q-t)-u', 'q-t-u'),
    ('-q^2', '-q^2'),
    ('q^-1', 'q^-1'),
    ('nabla( e[3] )', 'nabla(e[3])'),
    ('convert(s[1,1], e)', 'convert(s[1,1],e)'),
])
def test_render(text, canonical):
    node = expr.parse(text)
    assert expr.render(node) == canonical
    assert expr.parse(expr.render(node)) == node


def test_depth():
    assert expr.depth(expr.parse('q')) == 1
    assert expr.depth(expr.parse('nabla(e[2])')) == 2
    assert expr.depth(expr.parse('q+t*u')) == 3


def test_evaluate():
    assert _value('nabla(e[2])') == schur((2, )) + schur((1, 1)) * (q + t)
    assert _value('H[2]') == schur((2, )) + schur((1, 1)) * q
    assert _value('s[1]^2') == schur((2, )) + schur((1, 1))
    assert _value('(q+t)/2') == (q + t) / 2
    assert _value('q^-2') == 1 / q**2
    assert _value('2 + s[1]') == schur((1, )) + SymFunc.constant(scalars.scalar(2))
    assert _value('s[2]/q') == schur((2, )) / q
    assert _value('catalan(4,3)') == 1 + 2 * q + q**2 + q**3
    assert _value('parking(3,2)') == 3
    assert _value('tamari(4,4)') == 68
    assert _value('qmn(1,1)') == schur((1, ))
    assert _value('scalar(s[2,1], s[2,1])') == 1


def test_evaluate_convert():
    value = _value('convert(s[1,1], e)')
    assert value.basis == 'e'
    assert value == elementary(2)


def test_evaluate_division_by_zero():
    with pytest.raises(DivisionByZero):
        _value('s[1]/0')


@pytest.mark.parametrize('text, message', [
    ('s[1]/s[1]', 'Cannot divide by a symmetric function'),
    ('s[1]^-1', 'Negative power of a symmetric function'),
    ('s', "Basis name 's' used as a value"),
    ('s + 1', "Basis name 's' used as a value"),
    ('foo', "Unknown name 'foo'"),
    ('nabla(q)', 'nabla expects a symmetric function'),
    ('catalan(q, 3)', 'catalan expects an integer'),
    ('nabla(e[1], e[1])', 'nabla takes 1 arguments, got 2'),
    ('s[1,2]', 'is not a partition'),
    ('q $', 'Unexpected character'),
    ('(q', "Expected '\\)', found end of input"),
    ('q t', "Unexpected 't'"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError, match=message):
        expr.parse(text)


def test_parse_error_location():
    with pytest.raises(ParseError) as error:
        expr.parse('nabla(e[4')

    assert error.value.line == 1
    assert error.value.column == 10
    assert error.value.message == "Expected ']', found end of input"


def test_end_of_input_is_one_past_the_last_character():
    with pytest.raises(ParseError) as error:
        expr.parse('nabla(\n e[4')

    assert (error.value.line, error.value.column) == (2, 5)
