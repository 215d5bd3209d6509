"""A small expression language for holomorphic functions of z.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' ['-'] integer)?
    atom  := number | imaginary | 'z' | 'i' | 'pi' | name '(' expr ')' | '(' expr ')'

Imaginary literals are written '2i' or '2 i'; whitespace is insignificant.
"""
import cmath
import re
from .._errors import ExprSyntaxError
from .._errors import UnknownIdentifierError
from ..series import DEFAULT_ORDER
from ..series import TaylorSeries
from ..series import transcend


# the largest integer power the language accepts
MAX_POWER = 16


# the functions callable from expressions
FUNCTIONS = ('exp', 'cosh', 'sinh', 'log', 'cos', 'sin', 'sqrt')


# the binding power of each binary operator
_BINARY = {'+': 10, '-': 10, '*': 20, '/': 20}


# tokens: imaginary literal, number, identifier, single character operator
_TOKEN = re.compile(r"""
    \s*(?:
        (?P<imaginary>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*i(?![A-Za-z0-9_])
      | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<op>[-+*/^()])
    )""", re.VERBOSE)


class Node(object):
    """A node of a parsed expression."""

    def __init__(self, kind, offset, value=None, children=()):
        """
        Initialize a new node.

        Args:
            kind (str): 'num', 'var', 'neg', 'pow', 'call' or a binary operator
            offset (int): the byte offset of the node in the source
            value: the literal, exponent or function name of the node
            children (tuple): the operand nodes

        Returns:
            None

        """
        self.kind = kind
        self.offset = offset
        self.value = value
        self.children = tuple(children)

    def __repr__(self):
        return 'Node({!r}, {!r}, {})'.format(self.kind, self.value, list(self.children))

    def expand(self, base, order):
        """
        Expand the expression into a Taylor series.

        Args:
            base (complex): the expansion point
            order (int): the truncation degree

        Returns:
            TaylorSeries: the expansion of the expression around base

        """
        if self.kind == 'num':
            return TaylorSeries.constant(self.value, base, order)
        if self.kind == 'var':
            return TaylorSeries.variable(base, order)
        operands = [child.expand(base, order) for child in self.children]
        if self.kind == 'neg':
            return -operands[0]
        if self.kind == 'pow':
            return operands[0] ** self.value
        if self.kind == 'call':
            return transcend(self.value, operands[0])
        left, right = operands
        if self.kind == '+':
            return left + right
        if self.kind == '-':
            return left - right
        if self.kind == '*':
            return left * right
        return left / right


class _Parser(object):
    """A precedence climbing parser over a token list."""

    def __init__(self, source):
        self.source = source
        self.tokens = list(self._tokenize(source))
        self.index = 0

    def _offset(self, position):
        """Return the byte offset of a character position."""
        return len(self.source[:position].encode('utf-8'))

    def _tokenize(self, source):
        position = 0
        while True:
            match = _TOKEN.match(source, position)
            if match is None or match.end() == position:
                rest = source[position:]
                if rest.strip():
                    start = position + len(rest) - len(rest.lstrip())
                    raise ExprSyntaxError('unexpected character {!r}'.format(source[start]),
                                          self._offset(start))
                yield 'end', None, self._offset(len(source))
                return
            kind = match.lastgroup
            yield kind, match.group(kind), self._offset(match.start(kind))
            position = match.end()

    @property
    def token(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.token
        self.index += 1
        return token

    def _expect(self, text):
        kind, value, offset = self.token
        if kind != 'op' or value != text:
            found = 'end of input' if kind == 'end' else repr(value)
            raise ExprSyntaxError('expected {!r}, found {}'.format(text, found), offset)
        self._advance()

    def parse(self):
        node = self._binary(0)
        kind, value, offset = self.token
        if kind != 'end':
            raise ExprSyntaxError('unexpected {!r}'.format(value), offset)
        return node

    def _binary(self, min_power):
        left = self._unary()
        while True:
            kind, value, offset = self.token
            power = _BINARY.get(value) if kind == 'op' else None
            if power is None or power <= min_power:
                return left
            self._advance()
            left = Node(value, offset, children=(left, self._binary(power)))

    def _unary(self):
        kind, value, offset = self.token
        if kind == 'op' and value == '-':
            self._advance()
            return Node('neg', offset, children=(self._unary(),))
        return self._power()

    def _power(self):
        atom = self._atom()
        kind, value, offset = self.token
        if kind != 'op' or value != '^':
            return atom
        self._advance()
        sign = 1
        if self.token[0] == 'op' and self.token[1] == '-':
            self._advance()
            sign = -1
        kind, value, offset = self.token
        if kind != 'number' or not value.isdigit():
            raise ExprSyntaxError('expected an integer exponent', offset)
        self._advance()
        exponent = sign * int(value)
        if abs(exponent) > MAX_POWER:
            msg = 'exponent {} exceeds {}'.format(exponent, MAX_POWER)
            raise ExprSyntaxError(msg, offset)
        return Node('pow', atom.offset, exponent, (atom,))

    def _atom(self):
        kind, value, offset = self._advance()
        if kind == 'number':
            return Node('num', offset, complex(float(value)))
        if kind == 'imaginary':
            return Node('num', offset, complex(0, float(value)))
        if kind == 'name':
            return self._name(value, offset)
        if kind == 'op' and value == '(':
            node = self._binary(0)
            self._expect(')')
            return node
        found = 'end of input' if kind == 'end' else repr(value)
        raise ExprSyntaxError('unexpected {}'.format(found), offset)

    def _name(self, name, offset):
        if name == 'z':
            return Node('var', offset)
        if name == 'i':
            return Node('num', offset, 1j)
        if name == 'pi':
            return Node('num', offset, complex(cmath.pi))
        if name in FUNCTIONS:
            self._expect('(')
            argument = self._binary(0)
            self._expect(')')
            return Node('call', offset, name, (argument,))
        raise UnknownIdentifierError('unknown identifier {!r}'.format(name), offset)


def parse_expr(text):
    """
    Parse an expression into a syntax tree.

    Args:
        text (str): the source expression in the variable z

    Returns:
        Node: the root of the syntax tree

    """
    if not isinstance(text, str):
        raise TypeError('expression must be of type: str.')
    return _Parser(text).parse()


def parse_holo(text, base=0j, order=DEFAULT_ORDER):
    """
    Parse an expression and expand it into a Taylor series.

    Args:
        text (str): the source expression in the variable z
        base (complex): the expansion point
        order (int): the truncation degree

    Returns:
        TaylorSeries: the expansion, whose trust radius is unknown

    """
    return parse_expr(text).expand(base, order).with_radius(None)


# explicitly define the outward facing API of this module
__all__ = [parse_expr.__name__, parse_holo.__name__]
