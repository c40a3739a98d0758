"""
A small expression language over symmetric functions

Grammar, loosest binding first:

    expression := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := '-' unary | power
    power      := atom ('^' ['-'] integer)?
    atom       := integer | parameter | basis '[' parts ']' | name '(' arguments ')' | '(' expression ')'

A basis atom is one of m e h p s f pi for the classical bases, H for the modified
Macdonald polynomials and P for the Macdonald P basis. Every node knows at parse
time whether it is a scalar or a symmetric function.
"""

import logging
import re
from collections import namedtuple
from dataclasses import dataclass, field

from qtsym import macdonald, plethysm, rectangular, scalars, symfunc, tamari
from qtsym.errors import EvaluationError, ParseError, QtSymError
from qtsym.shapes import Partition
from qtsym.symfunc import SymFunc

SCALAR = 'scalar'
SYMFUNC = 'symfunc'
ANY = 'any'
BASIS = 'basis'
INTEGER = 'integer'

BASIS_ATOMS = ('m', 'e', 'h', 'p', 's', 'f', 'pi', 'H', 'P')

Token = namedtuple('Token', ['kind', 'text', 'line', 'column'])

_TOKEN_RE = re.compile(r'(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),\[\]])|(?P<space>[ \t\r]+)|(?P<newline>\n)')


def tokenize(text):
    """
    Split text into tokens, each carrying its 1-based line and column
    """

    tokens = []
    line = 1
    line_start = 0
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if not match:
            raise ParseError(line, position - line_start + 1, f'Unexpected character {text[position]!r}')
        kind = match.lastgroup
        if kind == 'newline':
            line += 1
            line_start = match.end()
        elif kind != 'space':
            tokens.append(Token(kind, match.group(), line, position - line_start + 1))
        position = match.end()
    tokens.append(Token('eof', '', line, position - line_start + 1))
    return tokens


@dataclass(frozen=True)
class Node:
    line: int = field(default=0, compare=False, repr=False)
    column: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Number(Node):
    value: int = 0

    kind = SCALAR
    precedence = 5


@dataclass(frozen=True)
class Parameter(Node):
    name: str = 'q'

    kind = SCALAR
    precedence = 5


@dataclass(frozen=True)
class BasisName(Node):
    name: str = 's'

    kind = BASIS
    precedence = 5


@dataclass(frozen=True)
class Atom(Node):
    basis: str = 's'
    parts: tuple = ()

    kind = SYMFUNC
    precedence = 5


@dataclass(frozen=True)
class Negate(Node):
    operand: Node = None

    precedence = 3

    @property
    def kind(self):
        return self.operand.kind


@dataclass(frozen=True)
class Binary(Node):
    op: str = '+'
    left: Node = None
    right: Node = None

    @property
    def precedence(self):
        return 1 if self.op in '+-' else 2

    @property
    def kind(self):
        kinds = {self.left.kind, self.right.kind}
        if SYMFUNC in kinds:
            return SYMFUNC
        return SCALAR if kinds == {SCALAR} else ANY


@dataclass(frozen=True)
class Power(Node):
    base: Node = None
    exponent: int = 1

    precedence = 4

    @property
    def kind(self):
        return self.base.kind


@dataclass(frozen=True)
class Call(Node):
    name: str = ''
    args: tuple = ()

    precedence = 5

    @property
    def kind(self):
        return FUNCTIONS[self.name][1]


# name: (argument kinds, result kind)
FUNCTIONS = {
    'catalan': ((INTEGER, INTEGER), SCALAR),
    'convert': ((SYMFUNC, BASIS), SYMFUNC),
    'delta': ((SYMFUNC, SYMFUNC), SYMFUNC),
    'kron': ((SYMFUNC, SYMFUNC), SYMFUNC),
    'nabla': ((SYMFUNC, ), SYMFUNC),
    'omega': ((SYMFUNC, ), SYMFUNC),
    'parking': ((INTEGER, INTEGER), SCALAR),
    'plethysm': ((SYMFUNC, ANY), SYMFUNC),
    'qmn': ((INTEGER, INTEGER), SYMFUNC),
    'qtscalar': ((SYMFUNC, SYMFUNC), SCALAR),
    'scalar': ((SYMFUNC, SYMFUNC), SCALAR),
    'seed': ((SYMFUNC, INTEGER, INTEGER), SYMFUNC),
    'skew': ((SYMFUNC, SYMFUNC), SYMFUNC),
    'star': ((SYMFUNC, ), SYMFUNC),
    'tamari': ((INTEGER, INTEGER), SCALAR),
}


class Parser:
    """
    Recursive descent over the token list
    """

    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    @property
    def current(self):
        return self.tokens[self.position]

    def advance(self):
        token = self.current
        if token.kind != 'eof':
            self.position += 1
        return token

    def fail(self, message, token=None):
        token = token or self.current
        raise ParseError(token.line, token.column, message)

    def expect(self, text):
        if self.current.text != text or self.current.kind == 'eof':
            found = 'end of input' if self.current.kind == 'eof' else repr(self.current.text)
            self.fail(f"Expected '{text}', found {found}")
        return self.advance()

    def operand(self, node):
        if isinstance(node, BasisName):
            self.fail(f'Basis name {node.name!r} used as a value', Token('name', node.name, node.line, node.column))
        return node

    def parse(self):
        node = self.expression()
        if self.current.kind != 'eof':
            self.fail(f'Unexpected {self.current.text!r}')
        return node

    def expression(self):
        node = self.term()
        while self.current.text in ('+', '-') and self.current.kind == 'op':
            token = self.advance()
            node = Binary(token.line, token.column, token.text, self.operand(node), self.operand(self.term()))
        return node

    def term(self):
        node = self.unary()
        while self.current.text in ('*', '/') and self.current.kind == 'op':
            token = self.advance()
            right = self.operand(self.unary())
            if token.text == '/' and right.kind == SYMFUNC:
                self.fail('Cannot divide by a symmetric function', token)
            node = Binary(token.line, token.column, token.text, self.operand(node), right)
        return node

    def unary(self):
        if self.current.text == '-' and self.current.kind == 'op':
            token = self.advance()
            return Negate(token.line, token.column, self.operand(self.unary()))
        return self.power()

    def power(self):
        node = self.atom()
        if self.current.text == '^':
            self.advance()
            sign = 1
            if self.current.text == '-':
                self.advance()
                sign = -1
            token = self.current
            if token.kind != 'number':
                self.fail('Expected an integer exponent')
            self.advance()
            exponent = sign * int(token.text)
            if exponent < 0 and node.kind == SYMFUNC:
                self.fail('Negative power of a symmetric function', token)
            node = Power(node.line, node.column, self.operand(node), exponent)
        return node

    def atom(self):
        token = self.current
        if token.kind == 'number':
            self.advance()
            return Number(token.line, token.column, int(token.text))
        if token.text == '(':
            self.advance()
            node = self.expression()
            self.expect(')')
            return node
        if token.kind != 'name':
            found = 'end of input' if token.kind == 'eof' else repr(token.text)
            self.fail(f'Expected a value, found {found}')

        self.advance()
        if token.text in scalars.PARAMETERS:
            return Parameter(token.line, token.column, token.text)
        if token.text in BASIS_ATOMS and self.current.text == '[':
            return Atom(token.line, token.column, token.text, self.parts())
        if token.text in FUNCTIONS and self.current.text == '(':
            return self.call(token)
        if token.text in BASIS_ATOMS:
            return BasisName(token.line, token.column, token.text)
        self.fail(f'Unknown name {token.text!r}', token)
        return None

    def parts(self):
        self.expect('[')
        values = []
        while self.current.text != ']':
            token = self.current
            if token.kind != 'number':
                self.fail("Expected a part or ']'" if token.kind != 'eof' else "Expected ']', found end of input")
            self.advance()
            values.append(int(token.text))
            if self.current.text == ',':
                self.advance()
            elif self.current.text != ']':
                self.expect(']')
        self.advance()
        if any(a < b for a, b in zip(values, values[1:])) or any(v == 0 for v in values):
            self.fail(f'{values} is not a partition')
        return tuple(values)

    def call(self, name):
        self.expect('(')
        args = []
        if self.current.text != ')':
            args.append(self.expression())
            while self.current.text == ',':
                self.advance()
                args.append(self.expression())
        self.expect(')')

        expected, _ = FUNCTIONS[name.text]
        if len(args) != len(expected):
            self.fail(f'{name.text} takes {len(expected)} arguments, got {len(args)}', name)
        for arg, kind in zip(args, expected):
            self._check_kind(name.text, arg, kind)
        return Call(name.line, name.column, name.text, tuple(args))

    def _check_kind(self, function, arg, kind):
        where = Token('arg', '', arg.line, arg.column)
        if kind == BASIS and not isinstance(arg, BasisName):
            self.fail(f'{function} expects a basis name', where)
        if kind != BASIS and isinstance(arg, BasisName):
            self.fail(f'Basis name {arg.name!r} used as a value', where)
        if kind == INTEGER and not isinstance(arg, Number):
            self.fail(f'{function} expects an integer', where)
        if kind == SYMFUNC and arg.kind == SCALAR:
            self.fail(f'{function} expects a symmetric function, got a scalar', where)


def parse(text):
    """
    Parse text into a typed expression tree
    """

    node = Parser(text).parse()
    if isinstance(node, BasisName):
        raise ParseError(node.line, node.column, f'Basis name {node.name!r} used as a value')
    logging.debug('Parsed %r as %r', text, node)
    return node


def _wrap(node, minimum):
    text = render(node)
    return f'({text})' if node.precedence < minimum else text


def render(node):
    """
    Canonical text of an expression tree; parse(render(e)) == e
    """

    if isinstance(node, Number):
        return str(node.value)
    if isinstance(node, (Parameter, BasisName)):
        return node.name
    if isinstance(node, Atom):
        return f'{node.basis}[{",".join(str(p) for p in node.parts)}]'
    if isinstance(node, Negate):
        return '-' + _wrap(node.operand, 3)
    if isinstance(node, Binary):
        return f'{_wrap(node.left, node.precedence)}{node.op}{_wrap(node.right, node.precedence + 1)}'
    if isinstance(node, Power):
        return f'{_wrap(node.base, 5)}^{node.exponent}'
    if isinstance(node, Call):
        return f'{node.name}({",".join(render(arg) for arg in node.args)})'
    raise QtSymError(f'Cannot render {node!r}')


def depth(node):
    if isinstance(node, Negate):
        return 1 + depth(node.operand)
    if isinstance(node, Binary):
        return 1 + max(depth(node.left), depth(node.right))
    if isinstance(node, Power):
        return 1 + depth(node.base)
    if isinstance(node, Call):
        return 1 + max((depth(arg) for arg in node.args), default=0)
    return 1


def _atom_value(node):
    mu = Partition(node.parts)
    if node.basis == 'H':
        return macdonald.macdonald_H(mu)
    if node.basis == 'P':
        return macdonald.macdonald_P(mu)
    return SymFunc.element(node.basis, mu)


def _integer(node):
    return node.value


def _call(node):
    name = node.name
    args = node.args
    if name == 'convert':
        return symfunc.convert(evaluate(args[0]), args[1].name)
    if name in ('catalan', 'parking', 'qmn', 'tamari'):
        m, n = (_integer(arg) for arg in args)
        if name == 'catalan':
            return rectangular.cat_q(m, n)
        if name == 'parking':
            return scalars.scalar(rectangular.parking_count(m, n))
        if name == 'tamari':
            return scalars.scalar(tamari.interval_count(m, n))
        return rectangular.qmn_pi(m, n)
    if name == 'seed':
        return rectangular.seed_family(evaluate(args[0]), _integer(args[1]), _integer(args[2]))

    values = [evaluate(arg) for arg in args]
    if name == 'nabla':
        return macdonald.nabla(values[0])
    if name == 'delta':
        return macdonald.delta_f(values[0], values[1])
    if name == 'omega':
        return symfunc.omega(values[0])
    if name == 'star':
        return plethysm.star(values[0])
    if name == 'skew':
        return symfunc.skew(values[0], values[1])
    if name == 'kron':
        return symfunc.kronecker(values[0], values[1])
    if name == 'plethysm':
        return plethysm.plethysm(values[0], values[1])
    if name == 'scalar':
        return symfunc.hall(values[0], values[1])
    if name == 'qtscalar':
        return macdonald.qt_scalar(values[0], values[1])
    raise EvaluationError(f'Unknown function {name}')


def _binary(node):
    left = evaluate(node.left)
    right = evaluate(node.right)
    if node.op == '/':
        if isinstance(right, SymFunc):
            raise EvaluationError(f'Cannot divide by the symmetric function {render(node.right)}')
        if isinstance(left, SymFunc):
            return left * scalars.inverse(right)
        return scalars.divide(left, right)
    if isinstance(left, SymFunc) or isinstance(right, SymFunc):
        if not isinstance(left, SymFunc):
            left = SymFunc.constant(left, right.basis)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        return left * right
    return scalars.arith(left, right, node.op)


def evaluate(node):
    """
    Value of an expression tree: a Q(q,t,u) scalar or a SymFunc
    """

    if isinstance(node, Number):
        return scalars.scalar(node.value)
    if isinstance(node, Parameter):
        return scalars.FIELD.gens[scalars.PARAMETERS.index(node.name)]
    if isinstance(node, Atom):
        return _atom_value(node)
    if isinstance(node, Negate):
        return -evaluate(node.operand)
    if isinstance(node, Binary):
        return _binary(node)
    if isinstance(node, Power):
        base = evaluate(node.base)
        if isinstance(base, SymFunc):
            return base**node.exponent
        return scalars.power(base, node.exponent)
    if isinstance(node, Call):
        return _call(node)
    raise EvaluationError(f'Cannot evaluate {render(node)}')
