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
Test case for module Weyl
"""

from weylharm.Polynomial import BiPoly, UniPoly, radial_times_xi
from weylharm.Scalar import factorial
from weylharm.Weyl import *
from tests import common

import unittest

import sympy


z = WeylOp2.z()
zb = WeylOp2.zb()
dz = WeylOp2.dz()
dzb = WeylOp2.dzb()

sz, szb = sympy.symbols('z zb')


def to_sympy(p):
    """BiPoly as a sympy expression with z and zb independent"""
    total = sympy.Integer(0)
    for (i, j), c in p.items():
        coefficient = sympy.Rational(c.re.numerator, c.re.denominator) + \
            sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        total += coefficient * sz ** i * szb ** j
    return total


def sympy_apply(D, p):
    """Wirtinger derivatives of each term, computed by sympy"""
    expression = to_sympy(p)
    total = sympy.Integer(0)
    for (a1, b1, a2, b2), c in D.items():
        coefficient = sympy.Rational(c.re.numerator, c.re.denominator) + \
            sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        derivative = sympy.diff(expression, sz, a2) if a2 else expression
        derivative = sympy.diff(derivative, szb, b2) if b2 else derivative
        total += coefficient * sz ** a1 * szb ** b1 * derivative
    return sympy.expand(total)


class WeylTestCase(common.WeylharmTestCase):
    """Test case for module Weyl"""

    def test_normal_order(self):
        """Unit test for weyl2_multiply"""
        self.assertOpEqual(weyl2_multiply(dz, z), z * dz + 1)
        self.assertOpEqual(dz ** 2 * z, z * dz ** 2 + 2 * dz)
        self.assertOpEqual((z * dz) * (zb * dzb), WeylOp2.monomial(1, 1, 1, 1))
        self.assertOpEqual(dzb * zb - zb * dzb, WeylOp2.constant(1))
        self.assertOpEqual(dz * zb, zb * dz)
        self.assertOpEqual(dz * dz, WeylOp2.monomial(0, 0, 2, 0))

    def test_associative(self):
        """Products are associative on random operators"""
        for _k in range(15):
            a = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            b = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            c = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            self.assertOpEqual((a * b) * c, a * (b * c))

    def test_apply(self):
        """Unit test for weyl2_apply"""
        pz = BiPoly.z()
        pzb = BiPoly.zb()
        self.assertEqual(weyl2_apply(laplacian(), pz ** 2 * pzb ** 2), 4 * pz * pzb)
        p = radial_times_xi(UniPoly.monomial(2), 3)
        self.assertEqual(weyl2_apply(angular_derivative(), p), 3 * p)
        self.assertEqual(weyl2_apply(z * dz, pz * pzb * pz), 2 * pz ** 2 * pzb)
        self.assertEqual(weyl2_apply(dz, BiPoly.constant(5)), BiPoly())

    def test_apply_sympy(self):
        """weyl2_apply agrees with sympy differentiation"""
        for _k in range(40):
            D = self.random_op()
            p = self.random_poly(max_degree=5, n_terms=5)
            ours = to_sympy(weyl2_apply(D, p))
            self.assertEqual(sympy.expand(ours - sympy_apply(D, p)), 0)

    def test_apply_composition(self):
        """(D1 D2) p == D1 (D2 p)"""
        for _k in range(30):
            D1 = self.random_op()
            D2 = self.random_op()
            p = self.random_poly(max_degree=6, n_terms=5)
            self.assertEqual(weyl2_apply(weyl2_multiply(D1, D2), p),
                             weyl2_apply(D1, weyl2_apply(D2, p)))

    def test_commutator(self):
        """Unit test for weyl2_commutator"""
        L = laplacian()
        self.assertOpEqual(weyl2_commutator(L, z * dz), L)
        self.assertOpEqual(weyl2_commutator(L, zb * dzb), L)
        self.assertOpEqual(weyl2_commutator(z * dz, zb * dzb), WeylOp2())
        D1 = 2 * L + z * dz
        D2 = L + zb * dzb
        self.assertOpEqual(weyl2_commutator(D1, D2), L)
        for _k in range(10):
            D = self.random_op()
            self.assertOpEqual(weyl2_commutator(D, D), WeylOp2())

    def test_jacobi(self):
        """The commutator satisfies the Jacobi identity"""
        for _k in range(10):
            a = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            b = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            c = self.random_op(max_order=2, n_terms=3, max_coefficient_degree=2)
            total = (weyl2_commutator(a, weyl2_commutator(b, c)) +
                     weyl2_commutator(b, weyl2_commutator(c, a)) +
                     weyl2_commutator(c, weyl2_commutator(a, b)))
            self.assertIsZero(total)
            self.assertOpEqual(weyl2_commutator(a, b), -weyl2_commutator(b, a))

    def test_apply_extracts_coefficients(self):
        """Derivatives of z^a zb^b pick out a! b! times one coefficient"""
        for _k in range(30):
            a1, b1, a2, b2 = (self.rng.randint(0, 4) for _j in range(4))
            D = WeylOp2.monomial(a1, b1, a2, b2)
            self.assertEqual(weyl2_apply(D, BiPoly.monomial(a2, b2)),
                             BiPoly.monomial(a1, b1, factorial(a2) * factorial(b2)))
        for _k in range(20):
            D = WeylOp2({(0, 0, self.rng.randint(0, 3), self.rng.randint(0, 3)): self.random_scalar()
                         for _j in range(4)})
            for a in range(4):
                for b in range(4):
                    value = weyl2_apply(D, BiPoly.monomial(a, b)).evaluate_origin()
                    self.assertEqual(value, factorial(a) * factorial(b) * D.coefficient((0, 0, a, b)))

    def test_conjugate(self):
        """Unit test for weyl2_conjugate"""
        self.assertOpEqual(weyl2_conjugate(z * dz), zb * dzb)
        self.assertOpEqual(weyl2_conjugate(laplacian()), laplacian())
        self.assertOpEqual(weyl2_conjugate(z ** 2 * dzb), zb ** 2 * dz)
        for _k in range(10):
            D1 = self.random_op()
            D2 = self.random_op()
            self.assertOpEqual(weyl2_conjugate(D1 * D2),
                               weyl2_conjugate(D1) * weyl2_conjugate(D2))

    def test_order(self):
        """Unit test for weyl2_order and weyl1_order"""
        self.assertEqual(weyl2_order(WeylOp2()), -1)
        self.assertEqual(weyl2_order(z * zb), 0)
        self.assertEqual((z * dz ** 2 * dzb + dz).order(), 3)
        self.assertEqual(weyl1_order(WeylOp1()), -1)
        self.assertEqual(WeylOp1.monomial(3, 2).order(), 2)

    def test_multiplication_operator(self):
        """Unit test for multiplication_operator"""
        pz = BiPoly.z()
        pzb = BiPoly.zb()
        M = multiplication_operator(1 - pz * pzb)
        self.assertOpEqual(M, 1 - z * zb)
        p = self.random_poly()
        self.assertEqual(weyl2_apply(M, p), (1 - pz * pzb) * p)

    def test_weyl1(self):
        """Unit test for the first Weyl algebra"""
        xo = WeylOp1.x()
        d = WeylOp1.d()
        x = UniPoly.x()
        self.assertOpEqual(weyl1_multiply(d, xo), xo * d + 1)
        self.assertEqual(weyl1_apply(xo * d, x ** 3), 3 * x ** 3)
        self.assertEqual(weyl1_apply(d ** 2, x), UniPoly())
        self.assertEqual(weyl1_apply(xo * d ** 2 + 2 * d, x ** 2), 6 * x)
        for _k in range(20):
            T1 = WeylOp1({(self.rng.randint(0, 3), self.rng.randint(0, 3)): self.random_scalar()
                          for _i in range(3)})
            T2 = WeylOp1({(self.rng.randint(0, 3), self.rng.randint(0, 3)): self.random_scalar()
                          for _i in range(3)})
            f = self.random_unipoly(max_degree=6)
            self.assertEqual(weyl1_apply(T1 * T2, f), weyl1_apply(T1, weyl1_apply(T2, f)))

    def test_str(self):
        """Operators print highest derivative order first"""
        self.assertEqual(str(dz * z), 'z*dz + 1')
        self.assertEqual(str(WeylOp1.monomial(1, 2) + 2 * WeylOp1.d()), 'x*d^2 + 2*d')
        self.assertEqual(str(WeylOp2()), '0')


if __name__ == '__main__':
    unittest.main()
