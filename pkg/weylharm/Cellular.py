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
Cellular decomposition of polyharmonic polynomials

A polynomial p with dz^n dzb^n p = 0 is written uniquely as
sum_j (1-|z|^2)^j w_j with L_{n-1-j,n-1-j} w_j = 0.
"""

from weylharm import DomainError
from weylharm.Harmonic import polyharmonic_order
from weylharm.Hypergeometric import basis_change_recursive, o_poly
from weylharm.Polynomial import (BiPoly, e_basis, one_minus_radial_power,
                                 radial_times_xi, substitute_radial)
from weylharm.Scalar import ZERO

import logging
from collections import namedtuple

logger = logging.getLogger(__name__)


class CellularDecomposition(namedtuple('CellularDecomposition', ['order', 'coeffs', 'layers'])):

    """Layers w_0 ... w_{order-1} and the coefficients k_{m,j} keyed by (m, j)"""

    __slots__ = ()

    def reconstruct(self):
        """sum_j (1-|z|^2)^j w_j"""
        result = BiPoly()
        for j, layer in enumerate(self.layers):
            result = result + one_minus_radial_power(j) * layer
        return result

    def e_terms(self):
        """Map (m, j) to k_{m,j} o_j^{|m|,n-1}(|z|^2) e_{m,j}; the values add up to p"""
        n = self.order
        return {(m, j): substitute_radial(o_poly(j, abs(m), n - 1).scale(c)) * e_basis(m, j)
                for (m, j), c in self.coeffs.items()}

    def coefficient_rows(self):
        """(m, j, k_{m,j}) sorted by m then j"""
        return [(m, j, self.coeffs[(m, j)]) for (m, j) in sorted(self.coeffs)]


def cellular_decompose(p, order=None):
    """Decompose p into its cellular layers

    order defaults to the polyharmonic order of p; a larger order is
    allowed and leaves the extra layers zero.
    """
    if not p:
        raise DomainError('the zero polynomial has no cellular decomposition')
    least = polyharmonic_order(p)
    n = least if order is None else order
    if n < least:
        raise DomainError('polynomial has polyharmonic order %d, more than %d' % (least, n))
    coeffs = {}
    layers = [dict() for _j in range(n)]
    for m, phi in sorted(p.components().items()):
        am = abs(m)
        table = basis_change_recursive(am, n - 1)
        reflected = phi.reflect()
        for i in range(n):
            k = ZERO
            for j, c in reflected._terms.items():
                k = k + c * table.entry(j, i)
            if not k:
                continue
            coeffs[(m, i)] = k
            radial = radial_times_xi(o_poly(i, am, n - 1).scale(k), m)
            for key, value in radial._terms.items():
                layers[i][key] = layers[i].get(key, ZERO) + value
    logger.debug('cellular_decompose: order %d, %d coefficients', n, len(coeffs))
    return CellularDecomposition(n, coeffs, tuple(BiPoly(layer) for layer in layers))
