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
Inner products on polynomials in z and zb
"""

from weylharm.Polynomial import component_project, conjugate_full
from weylharm.Scalar import ZERO

from fractions import Fraction


def module_inner_product(p, q):
    """Radial factor of the m = 0 component of p * conj(q), a polynomial in x = |z|^2"""
    return component_project(p * conjugate_full(q), 0)


def l2_disc_inner_product(p, q):
    """Integral of p * conj(q) over the unit disc with normalized area

    Only the radial component survives the angular integral, and
    |z|^(2k) integrates to 1/(k+1).
    """
    total = ZERO
    for k, c in module_inner_product(p, q)._terms.items():
        total = total + c * Fraction(1, k + 1)
    return total
