# vim: ts=4:sw=4:expandtab

# weylharm
# Copyright (C) 2026 The weylharm developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
Parse and print polynomial and operator expressions

Grammar, with whitespace ignored between tokens:

    expr   := term (('+' | '-') term)*
    term   := ('+' | '-')? factor ('*' factor)*
    factor := base ('^' natural)?
    base   := '(' expr ')' | name | rational

Names are z, zb, dz, dzb, x, d and the imaginary unit i; which of
them are allowed depends on what is being parsed. Multiplication is
always explicit.
"""

from weylharm import ExpressionSyntaxError
from weylharm.Polynomial import BiPoly, UniPoly
from weylharm.Scalar import I, format_scalar
from weylharm.Weyl import WeylOp1, WeylOp2

import logging
import re
from collections import namedtuple
from fractions import Fraction

logger = logging.getLogger(__name__)

MAX_EXPONENT = 64
# bound on the total degree of anything written down, after expansion
MAX_DEGREE = 1024

#
# syntax tree
#
Sum = namedtuple('Sum', ['terms'])              # tuple of (sign, node), sign is 1 or -1
Product = namedtuple('Product', ['factors'])    # tuple of nodes, order preserved
Power = namedtuple('Power', ['base', 'exponent'])
Atom = namedtuple('Atom', ['name'])
Literal = namedtuple('Literal', ['value'])      # nonnegative Fraction

Token = namedtuple('Token', ['kind', 'text', 'offset'])

ALL_NAMES = frozenset(('z', 'zb', 'dz', 'dzb', 'x', 'd', 'i'))

_TOKEN_RE = re.compile(r'(?P<number>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z]+)|(?P<op>[-+*^()])')
_SPACE_RE = re.compile(r'\s*')


def tokenize(src):
    """List of tokens, ending with one of kind 'end'"""
    tokens = []
    pos = 0
    while True:
        pos = _SPACE_RE.match(src, pos).end()
        if pos == len(src):
            break
        match = _TOKEN_RE.match(src, pos)
        if not match:
            raise ExpressionSyntaxError('unexpected character %r' % src[pos], pos, src)
        tokens.append(Token(match.lastgroup, match.group(), pos))
        pos = match.end()
    tokens.append(Token('end', '', len(src)))
    return tokens


class Parser:

    """Recursive descent over the token list"""

    def __init__(self, src, names=ALL_NAMES, context='expression'):
        self.src = src
        self.names = names
        self.context = context
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        token = self.tokens[self.pos]
        if 'end' != token.kind:
            self.pos += 1
        return token

    def fail(self, message, token=None):
        if token is None:
            token = self.peek()
        raise ExpressionSyntaxError(message, token.offset, self.src)

    def parse(self):
        node = self.expr()
        token = self.peek()
        if 'end' != token.kind:
            if token.kind in ('name', 'number') or '(' == token.text:
                self.fail('expected an operator, multiplication must be explicit')
            self.fail('unexpected %r' % token.text)
        return node

    def expr(self):
        """A lone unsigned term comes back bare, anything else as a Sum"""
        sign, node = self.term()
        explicit = sign is not None
        terms = [(sign or 1, node)]
        while 'op' == self.peek().kind and self.peek().text in ('+', '-'):
            outer = 1 if '+' == self.next().text else -1
            sign, node = self.term()
            terms.append((outer * (sign or 1), node))
        if 1 == len(terms) and (not explicit or terms[0][0] > 0):
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self):
        """(sign or None, node)"""
        token = self.peek()
        sign = None
        if 'op' == token.kind and token.text in ('+', '-'):
            self.next()
            sign = 1 if '+' == token.text else -1
        factors = [self.factor()]
        degree = degree_bound(factors[0])
        while '*' == self.peek().text:
            self.next()
            start = self.peek()
            factors.append(self.factor())
            degree += degree_bound(factors[-1])
            self.check_degree(degree, start)
        if 1 == len(factors):
            return sign, factors[0]
        return sign, Product(tuple(factors))

    def factor(self):
        base = self.base()
        if '^' != self.peek().text:
            return base
        self.next()
        token = self.next()
        if 'number' != token.kind or '/' in token.text:
            self.fail('expected a natural exponent', token)
        exponent = int(token.text)
        if exponent > MAX_EXPONENT:
            self.fail('exponent %d is larger than %d' % (exponent, MAX_EXPONENT), token)
        self.check_degree(degree_bound(base) * exponent, token)
        return Power(base, exponent)

    def check_degree(self, degree, token):
        if degree > MAX_DEGREE:
            self.fail('total degree %d is larger than %d' % (degree, MAX_DEGREE), token)

    def base(self):
        token = self.next()
        if '(' == token.text:
            node = self.expr()
            if ')' != self.peek().text:
                self.fail('expected ")"')
            self.next()
            return node
        if 'name' == token.kind:
            if token.text not in self.names:
                if token.text in ALL_NAMES:
                    self.fail('%r is not allowed in %s' % (token.text, self.context), token)
                self.fail('unknown name %r' % token.text, token)
            return Atom(token.text)
        if 'number' == token.kind:
            try:
                return Literal(Fraction(token.text))
            except ZeroDivisionError:
                self.fail('zero denominator', token)
        if 'end' == token.kind:
            self.fail('unexpected end of input', token)
        self.fail('unexpected %r' % token.text, token)


def degree_bound(node):
    """Upper bound on the total degree of the value of node"""
    if isinstance(node, Literal):
        return 0
    if isinstance(node, Atom):
        return 0 if 'i' == node.name else 1
    if isinstance(node, Power):
        return degree_bound(node.base) * node.exponent
    if isinstance(node, Product):
        return sum(degree_bound(f) for f in node.factors)
    return max(degree_bound(term) for _sign, term in node.terms)


def parse_ast(src, names=ALL_NAMES, context='expression'):
    """Syntax tree of src"""
    return Parser(src, names, context).parse()


#
# evaluation
#
_CONTEXTS = {
    'polynomial': (BiPoly, {'z': BiPoly.z(), 'zb': BiPoly.zb()}),
    'operator': (WeylOp2, {'z': WeylOp2.z(), 'zb': WeylOp2.zb(),
                           'dz': WeylOp2.dz(), 'dzb': WeylOp2.dzb()}),
    'univariate polynomial': (UniPoly, {'x': UniPoly.x()}),
    'ordinary operator': (WeylOp1, {'x': WeylOp1.x(), 'd': WeylOp1.d()}),
}


def evaluate_ast(node, cls, atoms):
    """Evaluate in the ring cls with the given values for the names"""
    if isinstance(node, Literal):
        return cls.constant(node.value)
    if isinstance(node, Atom):
        if 'i' == node.name:
            return cls.constant(I)
        return atoms[node.name]
    if isinstance(node, Power):
        return evaluate_ast(node.base, cls, atoms) ** node.exponent
    if isinstance(node, Product):
        result = evaluate_ast(node.factors[0], cls, atoms)
        for factor in node.factors[1:]:
            result = result * evaluate_ast(factor, cls, atoms)
        return result
    assert isinstance(node, Sum)
    result = cls()
    for sign, term in node.terms:
        value = evaluate_ast(term, cls, atoms)
        result = result + value if sign > 0 else result - value
    return result


def _parse_in(src, context):
    cls, atoms = _CONTEXTS[context]
    names = frozenset(atoms) | frozenset(('i',))
    return evaluate_ast(parse_ast(src, names, context), cls, atoms)


def parse_poly(src):
    """BiPoly from text in z and zb"""
    return _parse_in(src, 'polynomial')


def parse_op(src):
    """WeylOp2 from text in z, zb, dz and dzb, normal ordered"""
    return _parse_in(src, 'operator')


def parse_unipoly(src):
    """UniPoly from text in x"""
    return _parse_in(src, 'univariate polynomial')


def parse_ode(src):
    """WeylOp1 from text in x and d"""
    return _parse_in(src, 'ordinary operator')


#
# printing
#
def _power(name, k):
    if 1 == k:
        return name
    return '%s^%d' % (name, k)


def _monomial(names, exponents):
    return '*'.join(_power(name, k) for name, k in zip(names, exponents) if k)


def _format_terms(pairs):
    """Join (coefficient, monomial text) pairs; '' stands for the constant monomial"""
    if not pairs:
        return '0'
    out = []
    for coefficient, monomial in pairs:
        mixed = bool(coefficient.re) and bool(coefficient.im)
        negative = not mixed and coefficient.is_negative_looking()
        magnitude = -coefficient if negative else coefficient
        if not monomial:
            body = format_scalar(magnitude)
            if mixed and len(pairs) > 1:
                body = '(%s)' % body
        elif 1 == magnitude:
            body = monomial
        elif mixed:
            body = '(%s)*%s' % (format_scalar(magnitude), monomial)
        else:
            body = '%s*%s' % (format_scalar(magnitude), monomial)
        if not out:
            out.append('-' + body if negative else body)
        else:
            out.append((' - ' if negative else ' + ') + body)
    return ''.join(out)


def format_poly(p):
    """Canonical text of a BiPoly, e.g. 1 - 2*z*zb + z^2*zb^2"""
    return _format_terms([(c, _monomial(('z', 'zb'), key)) for key, c in p.items()])


def format_unipoly(f, var='x'):
    return _format_terms([(c, _monomial((var,), (k,))) for k, c in f.items()])


def format_op(D):
    """Canonical text of a WeylOp2, highest derivative order first"""
    return _format_terms([(c, _monomial(('z', 'zb', 'dz', 'dzb'), key))
                          for key, c in D.items()])


def format_weyl1(T):
    return _format_terms([(c, _monomial(('x', 'd'), key)) for key, c in T.items()])


_GENERATOR_NAMES = ('(z*zb)', '(z*dz)', '(zb*dzb)', '(dz*dzb)')


def format_generators(expression):
    """Text like (z*zb)*(z*dz)^2 - (dz*dzb), readable back by parse_op"""
    return _format_terms([(c, _monomial(_GENERATOR_NAMES, key))
                          for key, c in expression.items()])


def _format_node(node, parent):
    """parent is the kind of the enclosing node: 'sum', 'product', 'power' or None"""
    if isinstance(node, Literal):
        text = format_scalar(node.value)
        return '(%s)' % text if 'power' == parent and '/' in text else text
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, Power):
        text = '%s^%d' % (_format_node(node.base, 'power'), node.exponent)
        return '(%s)' % text if 'power' == parent else text
    if isinstance(node, Product):
        text = '*'.join(_format_node(f, 'product') for f in node.factors)
        return '(%s)' % text if parent in ('power', 'product') else text
    out = []
    for sign, term in node.terms:
        text = _format_node(term, 'sum')
        if not out:
            out.append(text if sign > 0 else '-' + text)
        else:
            out.append((' + ' if sign > 0 else ' - ') + text)
    text = ''.join(out)
    return text if parent is None else '(%s)' % text


def format_ast(node):
    """Text that parse_ast reads back to the same tree"""
    return _format_node(node, None)
