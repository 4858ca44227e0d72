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
Test case for module Expression
"""

from weylharm import ExpressionSyntaxError
from weylharm.Expression import *
from weylharm.Harmonic import build_L_operator
from weylharm.Invariance import GeneratorExpression
from weylharm.Polynomial import BiPoly, UniPoly
from weylharm.Scalar import GaussRational, I
from weylharm.Weyl import WeylOp1, WeylOp2, angular_derivative
from tests import common

from fractions import Fraction
import unittest


z = BiPoly.z()
zb = BiPoly.zb()


class ExpressionTestCase(common.WeylharmTestCase):
    """Test case for module Expression"""

    def assertSyntaxError(self, func, src, offset=None):
        with self.assertRaises(ExpressionSyntaxError) as cm:
            func(src)
        if offset is not None:
            self.assertEqual(cm.exception.offset, offset, '%r: %s' % (src, cm.exception))
        self.assertIn('at offset', str(cm.exception))
        return cm.exception

    def test_tokenize(self):
        """Unit test for tokenize"""
        tokens = tokenize(' 3/2*zb ^2')
        self.assertEqual([t.kind for t in tokens], ['number', 'op', 'name', 'op', 'number', 'end'])
        self.assertEqual([t.offset for t in tokens], [1, 4, 5, 8, 9, 10])
        self.assertSyntaxError(tokenize, 'z $ 1', 2)

    def test_parse_poly(self):
        """Unit test for parse_poly"""
        self.assertEqual(parse_poly('(1 - z*zb)^2'), 1 - 2 * z * zb + z ** 2 * zb ** 2)
        self.assertEqual(parse_poly('3/2*z^2 + i*zb').terms,
                         {(2, 0): Fraction(3, 2), (0, 1): I})
        self.assertEqual(parse_poly('  z\t*\nzb '), z * zb)
        self.assertEqual(parse_poly('z - -zb'), z + zb)
        self.assertEqual(parse_poly('-(z + 1)^2'), -(z + 1) ** 2)
        self.assertEqual(parse_poly('0'), BiPoly())
        self.assertEqual(parse_poly('z^0'), BiPoly.constant(1))
        self.assertEqual(parse_poly('(1+i)*z'), z.scale(GaussRational(1, 1)))

    def test_parse_errors(self):
        """Malformed text gives a syntax error with its position"""
        self.assertSyntaxError(parse_poly, 'z^', 2)
        e = self.assertSyntaxError(parse_poly, 'z*dz', 2)
        self.assertIn('not allowed', e.message)
        e = self.assertSyntaxError(parse_poly, '2z', 1)
        self.assertIn('explicit', e.message)
        self.assertSyntaxError(parse_poly, '2 (z)', 2)
        self.assertSyntaxError(parse_poly, 'zz', 0)
        self.assertSyntaxError(parse_poly, '(z + 1', 6)
        self.assertSyntaxError(parse_poly, '', 0)
        self.assertSyntaxError(parse_poly, 'z)', 1)
        self.assertSyntaxError(parse_poly, '1/0*z', 0)
        self.assertSyntaxError(parse_poly, 'z^1/2', 2)
        self.assertSyntaxError(parse_poly, 'z^65', 2)
        self.assertSyntaxError(parse_poly, 'z*-zb', 2)
        self.assertSyntaxError(parse_op, 'x', 0)
        self.assertSyntaxError(parse_unipoly, 'z', 0)
        self.assertSyntaxError(parse_ode, 'x*dz', 2)
        e = self.assertSyntaxError(parse_poly, 'z +')
        self.assertEqual(e.source, 'z +')

    def test_degree_limit(self):
        """The total degree is bounded, not only each exponent"""
        e = self.assertSyntaxError(parse_poly, '((1+z+zb)^64)^64', 14)
        self.assertIn('total degree', e.message)
        self.assertSyntaxError(parse_op, '(dz^64)^16*z', 11)
        self.assertSyntaxError(parse_poly, 'z^64*' * 16 + 'zb', 80)
        self.assertPolyEqual(parse_poly('(z^64)^16'), BiPoly({(1024, 0): 1}))
        self.assertPolyEqual(parse_poly('(1 + i)^64'), BiPoly({(0, 0): GaussRational(2 ** 32)}))
        self.assertEqual(degree_bound(parse_ast('(z + zb^3)^2*dz')), 7)
        self.assertEqual(degree_bound(parse_ast('3/2*i')), 0)

    def test_parse_op(self):
        """Unit test for parse_op"""
        self.assertOpEqual(parse_op('dz*z'), WeylOp2({(1, 0, 1, 0): 1, (0, 0, 0, 0): 1}))
        self.assertOpEqual(parse_op('(1 - z*zb)*dz*dzb + z*dz + zb*dzb - 1'),
                           build_L_operator(1, 1))
        self.assertOpEqual(parse_op('z*dz - zb*dzb'), angular_derivative())
        self.assertOpEqual(parse_op('dzb^2*zb'), WeylOp2({(0, 1, 0, 2): 1, (0, 0, 0, 1): 2}))

    def test_parse_unipoly_ode(self):
        """Unit test for parse_unipoly and parse_ode"""
        self.assertEqual(parse_unipoly('(1 - x)^2'), UniPoly({0: 1, 1: -2, 2: 1}))
        self.assertOpEqual(parse_ode('d*x'), WeylOp1({(1, 1): 1, (0, 0): 1}))
        self.assertOpEqual(parse_ode('x*d^2 + 2*d'), WeylOp1({(1, 2): 1, (0, 1): 2}))

    def test_format(self):
        """Unit test for the printers"""
        self.assertEqual(format_poly(1 - 2 * z * zb + z ** 2 * zb ** 2), '1 - 2*z*zb + z^2*zb^2')
        self.assertEqual(format_poly(BiPoly()), '0')
        self.assertEqual(format_poly(-z), '-z')
        self.assertEqual(format_poly(z.scale(GaussRational(1, 1))), '(1+i)*z')
        self.assertEqual(format_poly(z.scale(-I)), '-i*z')
        self.assertEqual(format_poly(BiPoly.constant(GaussRational(1, 1))), '1+i')
        self.assertEqual(format_poly(z + GaussRational(1, -1)), '(1-i) + z')
        self.assertEqual(format_poly(z.scale(Fraction(-3, 2)) + zb), '-3/2*z + zb')
        self.assertEqual(format_unipoly(UniPoly({0: 1, 3: -1})), '1 - x^3')
        self.assertEqual(format_unipoly(UniPoly({1: 2}), var='t'), '2*t')
        self.assertEqual(format_op(parse_op('dz*z')), 'z*dz + 1')
        self.assertEqual(format_weyl1(WeylOp1({(1, 2): 1, (0, 1): 2})), 'x*d^2 + 2*d')
        expression = GeneratorExpression({(0, 2, 0, 0): 1, (0, 1, 0, 0): -1, (1, 0, 0, 1): 3})
        self.assertEqual(format_generators(expression), '3*(z*zb)*(dz*dzb) + (z*dz)^2 - (z*dz)')
        self.assertOpEqual(parse_op(format_generators(expression)), expression.evaluate())

    def test_round_trip(self):
        """Printed values parse back to the same value"""
        for _k in range(250):
            p = self.random_poly(max_degree=5, n_terms=5)
            self.assertEqual(parse_poly(format_poly(p)), p, format_poly(p))
        for _k in range(250):
            D = self.random_op(max_order=3, n_terms=4)
            self.assertOpEqual(parse_op(format_op(D)), D, format_op(D))
        for _k in range(50):
            f = self.random_unipoly()
            self.assertEqual(parse_unipoly(format_unipoly(f)), f)

    def test_ast_round_trip(self):
        """format_ast writes text that parses to the same tree"""
        sources = ('z*(zb + 1)^2 - 3/2*dz',
                   '-z',
                   '+z',
                   '(z*zb)^3',
                   '(z^2)^3',
                   '1/2^2',
                   'z*(zb*dz)',
                   '(z - zb)*(z + zb)',
                   'z - -zb',
                   '(-z)^2',
                   '(-z)*zb',
                   '(z + zb) + 1',
                   'i*dzb + 4/6')
        for src in sources:
            tree = parse_ast(src)
            text = format_ast(tree)
            self.assertEqual(parse_ast(text), tree, '%r printed as %r' % (src, text))
        self.assertEqual(parse_ast('-z'), Sum(((-1, Atom('z')),)))
        self.assertEqual(parse_ast('+z'), Atom('z'))
        self.assertEqual(parse_ast('1/2^2'), Power(Literal(Fraction(1, 2)), 2))
        self.assertEqual(format_ast(parse_ast('1/2^2')), '(1/2)^2')
        self.assertEqual(parse_ast('z*zb*dz'), Product((Atom('z'), Atom('zb'), Atom('dz'))))

    def check_total(self, func, src):
        """func either returns or raises a syntax error inside the text"""
        try:
            func(src)
        except ExpressionSyntaxError as e:
            self.assertTrue(0 <= e.offset <= len(src), repr(src))

    def test_fuzz_bytes(self):
        """Random byte strings never crash the parser"""
        for _k in range(100000):
            length = self.rng.randint(0, 64)
            src = bytes(self.rng.getrandbits(8) for _i in range(length)).decode('latin-1')
            self.check_total(parse_ast, src)

    def test_fuzz_grammar(self):
        """Strings built from grammar pieces never crash evaluation"""
        pieces = ('z', 'zb', 'dz', 'dzb', 'i', 'x', '1', '2', '3/2', '0', '1/0',
                  '+', '-', '*', '^', '(', ')', ' ', '^2', '^70')
        for _k in range(3000):
            src = ''.join(self.rng.choice(pieces) for _i in range(self.rng.randint(0, 12)))
            self.check_total(parse_poly, src)
            self.check_total(parse_op, src)


if __name__ == '__main__':
    unittest.main()
