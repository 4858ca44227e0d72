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
Differential operators in canonical form

WeylOp2 is an element of the second Weyl algebra, generated by z, zb,
dz and dzb, and stored as a sum of z^a1 zb^b1 dz^a2 dzb^b2.
WeylOp1 is an element of the first Weyl algebra, generated by x and
d = d/dx, and stored as a sum of x^a d^b.
"""

from weylharm.Polynomial import SparseTerms, BiPoly, UniPoly
from weylharm.Scalar import ZERO, binomial, falling_factorial

import logging
from functools import lru_cache

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def _normal_order_product(k1, k2):
    """Canonical terms of z^a1 zb^b1 dz^a2 dzb^b2 * z^c1 zb^d1 dz^c2 dzb^d2

    dz^a z^c = sum_k binom(a,k) c(c-1)...(c-k+1) z^(c-k) dz^(a-k)
    and likewise for the barred pair.
    """
    (a1, b1, a2, b2) = k1
    (c1, d1, c2, d2) = k2
    out = []
    for k in range(min(a2, c1) + 1):
        fk = binomial(a2, k) * falling_factorial(c1, k)
        for l in range(min(b2, d1) + 1):
            fl = binomial(b2, l) * falling_factorial(d1, l)
            out.append(((a1 + c1 - k, b1 + d1 - l, a2 - k + c2, b2 - l + d2),
                        fk * fl))
    return tuple(out)


@lru_cache(maxsize=65536)
def _normal_order_product1(k1, k2):
    """Canonical terms of x^a d^b * x^c d^e"""
    (a, b) = k1
    (c, e) = k2
    return tuple(((a + c - k, b - k + e), binomial(b, k) * falling_factorial(c, k))
                 for k in range(min(b, c) + 1))


class WeylOp2(SparseTerms):

    """Operator sum of c * z^a1 zb^b1 dz^a2 dzb^b2; keys are (a1, b1, a2, b2)"""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        assert 4 == len(key) and min(key) >= 0, key
        return tuple(int(k) for k in key)

    @classmethod
    def unit_key(cls):
        return (0, 0, 0, 0)

    @staticmethod
    def sort_key(key):
        (a1, b1, a2, b2) = key
        # highest derivative order first
        return (-(a2 + b2), -a2, -(a1 + b1), -a1)

    @staticmethod
    def _mul_keys(k1, k2):
        return _normal_order_product(k1, k2)

    @classmethod
    def monomial(cls, a1, b1, a2, b2, c=1):
        return cls({(a1, b1, a2, b2): c})

    @classmethod
    def z(cls):
        return cls.monomial(1, 0, 0, 0)

    @classmethod
    def zb(cls):
        return cls.monomial(0, 1, 0, 0)

    @classmethod
    def dz(cls):
        return cls.monomial(0, 0, 1, 0)

    @classmethod
    def dzb(cls):
        return cls.monomial(0, 0, 0, 1)

    def order(self):
        return weyl2_order(self)

    def __str__(self):
        from weylharm.Expression import format_op
        return format_op(self)


class WeylOp1(SparseTerms):

    """Operator sum of c * x^a d^b; keys are (a, b)"""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        assert 2 == len(key) and min(key) >= 0, key
        return (int(key[0]), int(key[1]))

    @classmethod
    def unit_key(cls):
        return (0, 0)

    @staticmethod
    def sort_key(key):
        return (-key[1], -key[0])

    @staticmethod
    def _mul_keys(k1, k2):
        return _normal_order_product1(k1, k2)

    @classmethod
    def monomial(cls, a, b, c=1):
        return cls({(a, b): c})

    @classmethod
    def x(cls):
        return cls.monomial(1, 0)

    @classmethod
    def d(cls):
        return cls.monomial(0, 1)

    def order(self):
        return weyl1_order(self)

    def __str__(self):
        from weylharm.Expression import format_weyl1
        return format_weyl1(self)


#
# second Weyl algebra
#
def weyl2_multiply(D1, D2):
    """Composition D1 after D2, renormalized"""
    return D1 * D2


def weyl2_apply(D, p):
    """Apply the operator D to the polynomial p"""
    result = {}
    for (a1, b1, a2, b2), c in D._terms.items():
        for (i, j), v in p._terms.items():
            if i < a2 or j < b2:
                continue
            key = (i - a2 + a1, j - b2 + b1)
            factor = falling_factorial(i, a2) * falling_factorial(j, b2)
            result[key] = result.get(key, ZERO) + c * v * factor
    return BiPoly({k: v for k, v in result.items() if v})


def weyl2_commutator(D1, D2):
    """[D1, D2] = D1 D2 - D2 D1"""
    return D1 * D2 - D2 * D1


def weyl2_conjugate(D):
    """Exchange z with zb and dz with dzb, keeping coefficients"""
    return D.map_keys(lambda key: (key[1], key[0], key[3], key[2]))


def weyl2_order(D):
    """Highest total derivative order, -1 for the zero operator"""
    if not D:
        return -1
    return max(a2 + b2 for (_a1, _b1, a2, b2) in D._terms)


def laplacian():
    """dz dzb"""
    return WeylOp2.monomial(0, 0, 1, 1)


def angular_derivative():
    """A = z dz - zb dzb"""
    return WeylOp2({(1, 0, 1, 0): 1, (0, 1, 0, 1): -1})


def multiplication_operator(p):
    """The operator q -> p q"""
    return WeylOp2({(i, j, 0, 0): v for (i, j), v in p._terms.items()})


#
# first Weyl algebra
#
def weyl1_multiply(T1, T2):
    """Composition T1 after T2, renormalized"""
    return T1 * T2


def weyl1_apply(T, f):
    """Apply x^a d^b term-wise to a polynomial in x"""
    result = {}
    for (a, b), c in T._terms.items():
        for k, v in f._terms.items():
            if k < b:
                continue
            key = k - b + a
            result[key] = result.get(key, ZERO) + c * v * falling_factorial(k, b)
    return UniPoly({k: v for k, v in result.items() if v})


def weyl1_order(T):
    """Highest power of d, -1 for the zero operator"""
    if not T:
        return -1
    return max(b for (_a, b) in T._terms)
