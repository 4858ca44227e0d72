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
Terminating Gauss hypergeometric polynomials, the O-basis built from
them and the change of basis from powers of (1 - x)
"""

from weylharm import NonTerminatingError, DomainError
from weylharm.LinearAlgebra import rank, solve
from weylharm.Options import options
from weylharm.Polynomial import UniPoly
from weylharm.Scalar import ZERO, ONE, binomial, factorial, pochhammer, to_scalar

import logging
from collections import namedtuple
from functools import lru_cache

logger = logging.getLogger(__name__)


def termination_degree(a, b):
    """Smallest n with a = -n or b = -n, or None when neither is a non-positive integer"""
    degrees = [-x.as_integer() for x in (to_scalar(a), to_scalar(b))
               if x.is_nonpositive_integer()]
    if not degrees:
        return None
    return min(degrees)


def _check_parameters(a, b, c):
    degree = termination_degree(a, b)
    if degree is None:
        raise NonTerminatingError(
            'F(%s, %s, %s; x) does not terminate' % (a, b, c))
    c = to_scalar(c)
    if c.is_nonpositive_integer() and -c.as_integer() < degree:
        raise DomainError(
            'F(%s, %s, %s; x) divides by zero before it terminates' % (a, b, c))
    return degree


def hypergeom_poly(a, b, c):
    """F(a, b, c; x) = sum_k (a)_k (b)_k / ((c)_k k!) x^k, for terminating a or b"""
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    degree = _check_parameters(a, b, c)
    terms = {}
    term = ONE
    for k in range(degree + 1):
        if k:
            term = term * (a + k - 1) * (b + k - 1) / ((c + k - 1) * k)
        if not term:
            break
        terms[k] = term
    return UniPoly(terms)


def chu_vandermonde(a, b, c):
    """F(a, b, c; 1) = (c - b)_n / (c)_n with a = -n"""
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    if not a.is_nonpositive_integer():
        raise NonTerminatingError('Chu-Vandermonde needs a non-positive integer a, got %s' % a)
    _check_parameters(a, b, c)
    n = -a.as_integer()
    denominator = pochhammer(c, n)
    if not denominator:
        raise DomainError('(%s)_%d vanishes, use hypergeom_poly at 1 instead' % (c, n))
    return pochhammer(c - b, n) / denominator


#
# O-basis
#
def theta(k, j, m, n):
    """(-n+k)_j (m-n+k)_j / ((m+1)_j j!), the coefficients of o_k"""
    return (pochhammer(k - n, j) * pochhammer(m - n + k, j) /
            (pochhammer(m + 1, j) * factorial(j)))


def o_poly(l, m, n):
    """o_l^{m,n} = F(-n+l, m-n+l, m+1; x)"""
    return hypergeom_poly(l - n, m - n + l, m + 1)


class OBasis(namedtuple('OBasis', ['m', 'n', 'polys'])):

    """O_l^{m,n}(x) = (1-x)^l o_l^{m,n}(x) for l = 0 ... n"""

    __slots__ = ()

    def small(self, l):
        """The hypergeometric factor o_l"""
        return o_poly(l, self.m, self.n)

    def combine(self, coefficients):
        """sum_l c_l O_l"""
        result = UniPoly()
        for c, poly in zip(coefficients, self.polys):
            result = result + poly.scale(c)
        return result


def _o_basis(m, n):
    assert m >= 0 and n >= 0
    one_minus_x = UniPoly({0: 1, 1: -1})
    polys = tuple(one_minus_x ** l * o_poly(l, m, n) for l in range(n + 1))
    # leading terms in (1-x) make the family triangular, so this never fails
    matrix = [[poly.coefficient(k) for poly in polys] for k in range(n + 1)]
    if rank(matrix) != n + 1:
        raise AssertionError('O-basis for m=%d n=%d is degenerate' % (m, n))
    return OBasis(m, n, polys)


_o_basis_cached = lru_cache(maxsize=256)(_o_basis)


def o_basis(m, n):
    """The O-basis of polynomials of degree <= n"""
    if options.get('cache'):
        return _o_basis_cached(m, n)
    return _o_basis(m, n)


#
# change of basis
#
class BasisChangeTable(namedtuple('BasisChangeTable', ['m', 'n', 't'])):

    """(1-x)^l = sum_k t[l][k] O_k^{m,n}(x)"""

    __slots__ = ()

    def entry(self, l, k):
        return self.t[l][k]

    def expand(self, l):
        """Rebuild (1-x)^l from row l and the O-basis"""
        return o_basis(self.m, self.n).combine(self.t[l])


def s_sum(j, k, m, n):
    """Coefficient of (1-x)^k in O_j^{m,n}

    (-1)^(k-j) sum_{i=0}^{n-k} binom(k-j+i, k-j) theta_{j,k-j+i}
    """
    total = ZERO
    for i in range(n - k + 1):
        total = total + theta(j, k - j + i, m, n) * binomial(k - j + i, k - j)
    return total * (-1) ** (k - j)


def _basis_change_recursive(m, n):
    diagonal = [pochhammer(m + 1, n - k) / pochhammer(n + 1 - k, n - k)
                for k in range(n + 1)]
    s = {}

    def cached_s(j, k):
        if (j, k) not in s:
            s[(j, k)] = s_sum(j, k, m, n)
        return s[(j, k)]

    t = [[ZERO] * (n + 1) for _l in range(n + 1)]
    for l in range(n + 1):
        t[l][l] = diagonal[l]
        for k in range(l + 1, n + 1):
            total = ZERO
            for j in range(l, k):
                total = total + t[l][j] * cached_s(j, k)
            t[l][k] = -diagonal[k] * total
    return BasisChangeTable(m, n, tuple(tuple(row) for row in t))


_basis_change_recursive_cached = lru_cache(maxsize=256)(_basis_change_recursive)


def basis_change_recursive(m, n):
    """Table t_{l,k}^{m,n} from the triangular recursion"""
    assert m >= 0 and n >= 0
    if options.get('cache'):
        return _basis_change_recursive_cached(m, n)
    return _basis_change_recursive(m, n)


def basis_change_solve(m, n):
    """Table t_{l,k}^{m,n} by solving one linear system per row"""
    assert m >= 0 and n >= 0
    basis = o_basis(m, n)
    matrix = [[poly.coefficient(k) for poly in basis.polys] for k in range(n + 1)]
    one_minus_x = UniPoly({0: 1, 1: -1})
    rows = []
    for l in range(n + 1):
        target = one_minus_x ** l
        rows.append(tuple(solve(matrix, target.coefficients(n + 1))))
    return BasisChangeTable(m, n, tuple(rows))
