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
Reduction of rotation-invariant operators to ordinary differential
operators acting on one homogeneous component at a time

For an invariant D and an integer m there is a unique T in the first
Weyl algebra with D(p(|z|^2) xi_m) = xi_m (T p)(|z|^2).
"""

from weylharm import DomainError
from weylharm.Invariance import factor_invariant_basis_element, require_invariant
from weylharm.LinearAlgebra import nullspace
from weylharm.Options import options
from weylharm.Polynomial import (BiPoly, UniPoly, component_project,
                                 graded_monomials, radial_times_xi)
from weylharm.Scalar import binomial, factorial, falling_factorial
from weylharm.Weyl import (WeylOp1, WeylOp2, angular_derivative,
                           weyl1_apply, weyl2_apply, weyl2_order)

import logging
from fractions import Fraction
from functools import lru_cache

logger = logging.getLogger(__name__)


#
# building blocks, all for m >= 0
#
def radial_block(alpha):
    """(z zb)^alpha acts as multiplication by x^alpha"""
    return WeylOp1.monomial(alpha, 0)


def active_euler_block(alpha, m):
    """z^alpha dz^alpha on the component with xi_m = z^m"""
    return WeylOp1({(alpha - l, alpha - l): binomial(alpha, l) * falling_factorial(m, l)
                    for l in range(alpha + 1)})


def passive_euler_block(alpha):
    """zb^alpha dzb^alpha on the component with xi_m = z^m"""
    return WeylOp1.monomial(alpha, alpha)


def laplace_block(alpha, m):
    """(dz dzb)^alpha on the component with xi_m = z^m"""
    return WeylOp1({(alpha - l, 2 * alpha - l):
                    binomial(alpha, l) * falling_factorial(m + alpha, l)
                    for l in range(alpha + 1)})


@lru_cache(maxsize=4096)
def word_reduction(word, m):
    """The ordinary operator of one generator word on component m

    For m < 0 the two Euler factors trade places: zb dzb becomes
    the active one and |m| replaces m.
    """
    if m >= 0:
        z_block = active_euler_block(word.euler_z, m)
        zb_block = passive_euler_block(word.euler_zb)
    else:
        z_block = passive_euler_block(word.euler_z)
        zb_block = active_euler_block(word.euler_zb, -m)
    return (radial_block(word.radial) * z_block * zb_block *
            laplace_block(word.laplace, abs(m)))


def _lambda_m(D, m):
    result = WeylOp1()
    for key, c in D._terms.items():
        word = factor_invariant_basis_element(key)
        result = result + word_reduction(word, m).scale(c)
    return result


_lambda_m_cached = lru_cache(maxsize=1024)(_lambda_m)


def lambda_m(D, m):
    """The ordinary differential operator T_{m,D}"""
    require_invariant(D)
    if options.get('cache'):
        return _lambda_m_cached(D, m)
    return _lambda_m(D, m)


def component_image(D, m, f):
    """Radial factor of D(f(|z|^2) xi_m) on component m"""
    return component_project(weyl2_apply(D, radial_times_xi(f, m)), m)


def fit_component_operator(D, m):
    """T_{m,D} recovered from how D acts on x^k xi_m for k up to the order of D

    T = sum_b q_b(x) d^b, and T x^k = sum_{b<=k} q_b k!/(k-b)! x^(k-b)
    is solved for q_k one k at a time.
    """
    require_invariant(D)
    n = max(weyl2_order(D), 0)
    q = []
    for k in range(n + 1):
        rest = component_image(D, m, UniPoly.monomial(k))
        for b in range(k):
            rest = rest - q[b] * UniPoly.monomial(k - b, falling_factorial(k, b))
        q.append(rest.scale(Fraction(1, factorial(k))))
    terms = {}
    for b, qb in enumerate(q):
        for a, c in qb._terms.items():
            terms[(a, b)] = c
    return WeylOp1(terms)


def projector_as_operator(members, pick):
    """prod over k != pick of (A - m_k)/(pick - m_k), A the angular derivative"""
    members = list(members)
    if len(set(members)) != len(members):
        raise DomainError('projector set has repeated integers: %s' % members)
    if pick not in members:
        raise DomainError('%d is not a member of %s' % (pick, members))
    A = angular_derivative()
    result = WeylOp2.constant(1)
    for mk in members:
        if mk == pick:
            continue
        result = result * (A - mk).scale(Fraction(1, pick - mk))
    return result


def verify_intertwining(D, m, p):
    """Check D(p(|z|^2) xi_m) == xi_m (T_{m,D} p)(|z|^2)"""
    lhs = weyl2_apply(D, radial_times_xi(p, m))
    rhs = radial_times_xi(weyl1_apply(lambda_m(D, m), p), m)
    return lhs == rhs


def _kernel(columns, image, make):
    """Nullspace of the linear map column -> image(column), as polynomials"""
    images = [image(column) for column in columns]
    rows = sorted(set(key for img in images for key in img._terms))
    matrix = [[img.coefficient(row) for img in images] for row in rows]
    basis = []
    for vector in nullspace(matrix, len(columns)):
        basis.append(make({col: v for col, v in zip(columns, vector) if v}))
    return basis


def kernel_bounded(D, max_degree):
    """Basis of {p : deg p <= max_degree, D p = 0}"""
    assert max_degree >= 0
    columns = graded_monomials(max_degree)
    basis = _kernel(columns,
                    lambda key: weyl2_apply(D, BiPoly.monomial(*key)),
                    BiPoly)
    logger.debug('kernel_bounded: degree %d, dimension %d', max_degree, len(basis))
    return basis


def component_kernel_bounded(T, max_degree):
    """Basis of {f : deg f <= max_degree, T f = 0}"""
    assert max_degree >= 0
    return _kernel(list(range(max_degree + 1)),
                   lambda k: weyl1_apply(T, UniPoly.monomial(k)),
                   UniPoly)


def hypergeometric_operator(gamma1, gamma2, m):
    """Closed form of T_{m,L} for L = L_{gamma1,gamma2}

    x(1-x) d^2 + [|m|+1 - (|m|+1-gamma1-gamma2) x] d + r_m |m| - gamma1 gamma2
    with r_m = gamma1 for m >= 0 and gamma2 for m < 0.
    """
    am = abs(m)
    r_m = gamma1 if m >= 0 else gamma2
    return WeylOp1({(1, 2): 1,
                    (2, 2): -1,
                    (0, 1): am + 1,
                    (1, 1): gamma1 + gamma2 - (am + 1),
                    (0, 0): r_m * am - gamma1 * gamma2})
