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
Polyharmonic polynomials, the Almansi representation, the operators
L_{g1,g2} = (1-|z|^2) dz dzb + g1 z dz + g2 zb dzb - g1 g2 and the
polynomials they annihilate
"""

from weylharm import DomainError, NotAnnihilatedError
from weylharm.Hypergeometric import hypergeom_poly
from weylharm.Polynomial import (BiPoly, UniPoly, component_project,
                                 from_components, one_minus_radial_power,
                                 radial_times_xi)
from weylharm.Scalar import ZERO, binomial, factorial, pochhammer, to_scalar
from weylharm.Weyl import WeylOp2, multiplication_operator, weyl2_apply

import logging
from collections import namedtuple

logger = logging.getLogger(__name__)


def polyharmonic_order(p):
    """Least n with dz^n dzb^n p = 0

    A monomial z^k zb^l survives dz^n dzb^n exactly when both k and l
    are at least n.
    """
    if not p:
        return 0
    return 1 + max(min(i, j) for (i, j) in p._terms)


#
# Almansi
#
class AlmansiDecomposition(namedtuple('AlmansiDecomposition', ['layers'])):

    """p = sum_j (1-|z|^2)^j q_j with every q_j harmonic"""

    __slots__ = ()

    def reconstruct(self):
        result = BiPoly()
        for j, layer in enumerate(self.layers):
            result = result + one_minus_radial_power(j) * layer
        return result


def almansi_decompose(p):
    """Split p into harmonic layers q_0 ... q_{n-1}, n the polyharmonic order

    z^k zb^l with k >= l is z^(k-l) (1 - (1-|z|^2))^l, expanded by the
    binomial theorem; the case l > k is the mirror image.
    """
    if not p:
        raise DomainError('the zero polynomial has no Almansi decomposition')
    n = polyharmonic_order(p)
    layers = [dict() for _j in range(n)]
    for (k, l), c in p._terms.items():
        low = min(k, l)
        key = (k - low, l - low)
        for i in range(low + 1):
            value = c * ((-1) ** i * binomial(low, i))
            layers[i][key] = layers[i].get(key, ZERO) + value
    return AlmansiDecomposition(tuple(BiPoly(layer) for layer in layers))


#
# L operators
#
def build_L_operator(gamma1, gamma2):
    """(1-|z|^2) dz dzb + g1 z dz + g2 zb dzb - g1 g2"""
    gamma1 = to_scalar(gamma1)
    gamma2 = to_scalar(gamma2)
    return WeylOp2({(0, 0, 1, 1): 1,
                    (1, 1, 1, 1): -1,
                    (1, 0, 1, 0): gamma1,
                    (0, 1, 0, 1): gamma2,
                    (0, 0, 0, 0): -gamma1 * gamma2})


def m_operator(l):
    """M^l, multiplication by (1-|z|^2)^l"""
    return multiplication_operator(one_minus_radial_power(l))


class GammaHarmonicCoefficients(namedtuple('GammaHarmonicCoefficients',
                                           ['gamma1', 'gamma2', 'coeffs'])):

    """Data of sum_m c_m F(-g1, m-g2, m+1; |z|^2) z^m plus the mirrored sum over m < 0"""

    __slots__ = ()

    def __new__(cls, gamma1, gamma2, coeffs):
        clean = {int(m): to_scalar(c) for m, c in dict(coeffs).items()}
        return super(GammaHarmonicCoefficients, cls).__new__(
            cls, to_scalar(gamma1), to_scalar(gamma2),
            {m: c for m, c in clean.items() if c})

    def r(self, m):
        """The sequence r_m: gamma1 for m >= 0, gamma2 for m < 0"""
        return self.gamma1 if m >= 0 else self.gamma2


def gamma_radial_factor(gamma1, gamma2, m):
    """Radial factor of the m-th basis solution of L_{g1,g2}"""
    gamma1 = to_scalar(gamma1)
    gamma2 = to_scalar(gamma2)
    if m >= 0:
        return hypergeom_poly(-gamma1, m - gamma2, m + 1)
    return hypergeom_poly(-gamma2, -m - gamma1, -m + 1)


def gamma_harmonic_from_coeffs(g):
    """Build the (g1,g2)-harmonic polynomial with the given coefficients c_m"""
    components = {}
    for m, c in g.coeffs.items():
        components[m] = gamma_radial_factor(g.gamma1, g.gamma2, m).scale(c)
    return from_components(components)


def gamma_harmonic_to_coeffs(p, gamma1, gamma2):
    """Recover c_m = dz^m p(0)/m! and c_{-m} = dzb^m p(0)/m!"""
    L = build_L_operator(gamma1, gamma2)
    if weyl2_apply(L, p):
        raise NotAnnihilatedError(
            'polynomial is not annihilated by L_{%s,%s}' % (to_scalar(gamma1), to_scalar(gamma2)))
    coeffs = {}
    for m in p.support():
        if m >= 0:
            derivative = WeylOp2.monomial(0, 0, m, 0)
        else:
            derivative = WeylOp2.monomial(0, 0, 0, -m)
        value = weyl2_apply(derivative, p).evaluate_origin() / factorial(abs(m))
        if value:
            coeffs[m] = value
    return GammaHarmonicCoefficients(gamma1, gamma2, coeffs)


def gamma_layer_coefficients(gamma1, gamma2, m):
    """t_0(m) ... t_{g1}(m) with F(-g1, m-g2, m+1; x) = sum_j t_j(m) (1-x)^j

    t_j(m) = (-1)^j sum_{k=j}^{g1} (-g1)_k (m-g2)_k / ((m+1)_k k!) binom(k, j);
    the denominators (m+1)_k never vanish for natural m.
    """
    gamma1 = to_scalar(gamma1)
    if not gamma1.is_natural():
        raise DomainError('gamma1 must be a natural number, got %s' % gamma1)
    top = gamma1.as_integer()
    ratios = [pochhammer(-gamma1, k) * pochhammer(m - to_scalar(gamma2), k) /
              (pochhammer(m + 1, k) * factorial(k)) for k in range(top + 1)]
    result = []
    for j in range(top + 1):
        total = ZERO
        for k in range(j, top + 1):
            total = total + ratios[k] * binomial(k, j)
        result.append(total * (-1) ** j)
    return result


def gamma_layers(g):
    """Holomorphic h_0 ... h_{g1} with sum_j (1-|z|^2)^j h_j the one-sided expansion"""
    if any(m < 1 for m in g.coeffs):
        raise DomainError('layers need coefficients supported on m >= 1; split the sum first')
    if not g.gamma1.is_natural():
        raise DomainError('gamma1 must be a natural number, got %s' % g.gamma1)
    top = g.gamma1.as_integer()
    layers = [dict() for _j in range(top + 1)]
    for m, c in g.coeffs.items():
        for j, t in enumerate(gamma_layer_coefficients(g.gamma1, g.gamma2, m)):
            if t:
                layers[j][(m, 0)] = c * t
    return [BiPoly(layer) for layer in layers]


def gamma_harmonic_split(g):
    """(P1, P2, P3): the parts from m >= 1, from m <= -1 and from m = 0"""
    parts = ({}, {}, {})
    for m, c in g.coeffs.items():
        index = 0 if m > 0 else (1 if m < 0 else 2)
        parts[index][m] = c
    return tuple(gamma_harmonic_from_coeffs(
        GammaHarmonicCoefficients(g.gamma1, g.gamma2, part)) for part in parts)


def gamma_to_polyharmonic_bound(gamma1, gamma2, p):
    """Exact polyharmonic order of a (g1,g2)-harmonic p, checked against max(g1,g2)+1"""
    gamma1 = to_scalar(gamma1)
    gamma2 = to_scalar(gamma2)
    if not (gamma1.is_natural() and gamma2.is_natural()):
        raise DomainError('the order bound needs natural gamma1, gamma2')
    if weyl2_apply(build_L_operator(gamma1, gamma2), p):
        raise NotAnnihilatedError(
            'polynomial is not annihilated by L_{%s,%s}' % (gamma1, gamma2))
    g = max(gamma1.as_integer(), gamma2.as_integer()) + 1
    if weyl2_apply(WeylOp2.monomial(0, 0, g, g), p):
        raise AssertionError('(%s,%s)-harmonic polynomial is not polyharmonic of order %d'
                             % (gamma1, gamma2, g))
    return polyharmonic_order(p)


#
# the basis e_{m,n}
#
def e_grading_decompose(p):
    """Coefficients of p in the basis e_{m,n} = (1-|z|^2)^n xi_m, keyed by (m, n)"""
    result = {}
    for m, phi in p.components().items():
        for n, c in phi.reflect()._terms.items():
            result[(m, n)] = c
    return result


def e_grading_reconstruct(coeffs):
    """Inverse of e_grading_decompose"""
    components = {}
    for (m, n), c in coeffs.items():
        reflected = components.setdefault(m, {})
        reflected[n] = reflected.get(n, ZERO) + to_scalar(c)
    return from_components({m: UniPoly(terms).reflect()
                            for m, terms in components.items()})


class ESpaceSplit(namedtuple('ESpaceSplit', ['holomorphic', 'antiholomorphic', 'radial'])):

    """p = holomorphic + antiholomorphic + radial, by the sign of m"""

    __slots__ = ()

    def depth(self, part, n):
        """The piece of one part spanned by e_{m,n} for a fixed n"""
        coeffs = e_grading_decompose(getattr(self, part))
        return e_grading_reconstruct({key: c for key, c in coeffs.items() if key[1] == n})


def e_space_split(p):
    """Split p into the sums over m >= 1, m <= -1 and m = 0 of its components"""
    parts = ({}, {}, {})
    for m, phi in p.components().items():
        index = 0 if m > 0 else (1 if m < 0 else 2)
        parts[index][m] = phi
    return ESpaceSplit(*(from_components(part) for part in parts))


def radial_component(p, m):
    """pi_m p as a BiPoly"""
    return radial_times_xi(component_project(p, m), m)
