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
Rotation-invariant operators: detection, factorization into the
generators z*zb, z*dz, zb*dzb, dz*dzb, and rewriting
"""

from weylharm import NotInvariantError, DomainError
from weylharm.Polynomial import RotPoly, UniPoly, rotate_formal
from weylharm.Scalar import ZERO, stirling_first, to_scalar
from weylharm.Weyl import WeylOp2, weyl2_apply, weyl2_commutator

import logging
from collections import namedtuple

logger = logging.getLogger(__name__)


def _is_invariant_key(key):
    (a1, b1, a2, b2) = key
    return a1 - a2 == b1 - b2


def is_rotation_invariant(D):
    """True iff every canonical term has a1 - a2 == b1 - b2"""
    return all(_is_invariant_key(key) for key in D._terms)


def require_invariant(D):
    """Raise NotInvariantError naming the first offending term"""
    for key in D.keys():
        if not _is_invariant_key(key):
            bad = WeylOp2.monomial(*key)
            raise NotInvariantError(
                'operator does not commute with rotations: term %s' % bad)


def apply_to_rotated(D, r):
    """Apply D to a RotPoly, treating t as a constant"""
    return RotPoly.from_slices({t: weyl2_apply(D, poly)
                                for t, poly in r.slices().items()})


def commutes_with_formal_rotation(D, p):
    """True iff D(p(t z, zb/t)) equals (Dp)(t z, zb/t) identically in t"""
    return apply_to_rotated(D, rotate_formal(p)) == rotate_formal(weyl2_apply(D, p))


class GeneratorWord(namedtuple('GeneratorWord', ['radial', 'euler_z', 'euler_zb', 'laplace'])):

    """(z zb)^g1 * z^g2 dz^g2 * zb^g3 dzb^g3 * (dz dzb)^g4"""

    __slots__ = ()

    def expand(self):
        """Multiply the factors out in the Weyl algebra"""
        factors = (WeylOp2.monomial(self.radial, self.radial, 0, 0),
                   WeylOp2.monomial(self.euler_z, 0, self.euler_z, 0),
                   WeylOp2.monomial(0, self.euler_zb, 0, self.euler_zb),
                   WeylOp2.monomial(0, 0, self.laplace, self.laplace))
        result = factors[0]
        for factor in factors[1:]:
            result = result * factor
        return result

    def __str__(self):
        return 'R^%d * Ez^%d * Ebz^%d * L^%d' % tuple(self)


def factor_invariant_basis_element(key):
    """Factor the invariant monomial operator with exponents (a1, b1, a2, b2)"""
    (a1, b1, a2, b2) = key
    if not _is_invariant_key(key):
        raise NotInvariantError(
            'exponents %s violate a1 - a2 = b1 - b2' % (tuple(key),))
    if a1 <= a2:
        return GeneratorWord(0, a1, b1, a2 - a1)
    if a1 <= b1:
        return GeneratorWord(a1, 0, b1 - a1, a2)
    return GeneratorWord(b1, a1 - b1, 0, a2 + b1 - a1)


def euler_power_expand(n):
    """z^n dz^n as a polynomial in the single operator z*dz

    The result is a UniPoly whose variable stands for z*dz; its
    coefficients are the Stirling numbers s(n, .).
    """
    return UniPoly({k: stirling_first(n, k) for k in range(n + 1)})


class GeneratorExpression:

    """Sum of c * (z zb)^r (z dz)^a (zb dzb)^b (dz dzb)^l, factors in that order

    Keys of terms are the exponent tuples (r, a, b, l).
    """

    __slots__ = ('terms',)

    def __init__(self, terms):
        self.terms = {tuple(k): to_scalar(v) for k, v in terms.items() if v}

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def evaluate(self):
        """Multiply every word out and add, giving a WeylOp2"""
        result = WeylOp2()
        for exponents, c in self.items():
            result = result + expand_generator_word(exponents).scale(c)
        return result

    def __eq__(self, other):
        if not isinstance(other, GeneratorExpression):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        from weylharm.Expression import format_generators
        return format_generators(self)


GENERATORS = (WeylOp2.monomial(1, 1, 0, 0),
              WeylOp2.monomial(1, 0, 1, 0),
              WeylOp2.monomial(0, 1, 0, 1),
              WeylOp2.monomial(0, 0, 1, 1))


def expand_generator_word(exponents):
    """(z zb)^r (z dz)^a (zb dzb)^b (dz dzb)^l as a WeylOp2"""
    result = WeylOp2.constant(1)
    for generator, power in zip(GENERATORS, exponents):
        if power:
            result = result * generator ** power
    return result


def evaluate_generators(expression):
    return expression.evaluate()


def rewrite_in_generators(D):
    """Express an invariant operator through z zb, z dz, zb dzb and dz dzb"""
    require_invariant(D)
    terms = {}
    for key, c in D._terms.items():
        word = factor_invariant_basis_element(key)
        for a in range(word.euler_z + 1):
            sa = stirling_first(word.euler_z, a)
            if not sa:
                continue
            for b in range(word.euler_zb + 1):
                sb = stirling_first(word.euler_zb, b)
                if not sb:
                    continue
                exponents = (word.radial, a, b, word.laplace)
                terms[exponents] = terms.get(exponents, ZERO) + c * (sa * sb)
    logger.debug('rewrite_in_generators: %d terms became %d words',
                 len(D), len(terms))
    return GeneratorExpression(terms)


def lie_bracket_gamma(D1, D2):
    """gamma with [D1, D2] = gamma dz dzb for D1, D2 in span{1, z dz, zb dzb, dz dzb}

    gamma = a4 (b2 + b3) - b4 (a2 + a3) where a_k, b_k are the
    coefficients of the operands on 1, z dz, zb dzb, dz dzb.
    """
    basis = ((0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1))

    def coordinates(D):
        extra = set(D._terms) - set(basis)
        if extra:
            raise DomainError(
                'operator is outside the span of 1, z*dz, zb*dzb, dz*dzb')
        return [D.coefficient(key) for key in basis]

    a = coordinates(D1)
    b = coordinates(D2)
    gamma = a[3] * (b[1] + b[2]) - b[3] * (a[1] + a[2])
    assert weyl2_commutator(D1, D2) == WeylOp2.monomial(0, 0, 1, 1, gamma)
    return gamma
