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
Exact dense linear algebra over the Gaussian rationals
"""

from weylharm import DomainError
from weylharm.Scalar import ZERO, ONE, to_scalar

import logging

logger = logging.getLogger(__name__)


def _copy(matrix):
    return [[to_scalar(v) for v in row] for row in matrix]


def row_reduce(matrix):
    """Return (reduced row echelon form, pivot columns)

    Among the candidate rows for a pivot, the entry with the
    shortest numerator is chosen. The reduced form itself is unique,
    so only the cost depends on that choice.
    """
    m = _copy(matrix)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        candidates = [r for r in range(piv_r, n_rows) if m[r][piv_c]]
        if not candidates:
            continue
        best = min(candidates, key=lambda r: (m[r][piv_c].bit_length(), r))
        if best != piv_r:
            m[piv_r], m[best] = m[best], m[piv_r]
        inverse = ONE / m[piv_r][piv_c]
        m[piv_r] = [v * inverse for v in m[piv_r]]
        pivot_row = m[piv_r]
        for r in range(n_rows):
            if r == piv_r:
                continue
            factor = m[r][piv_c]
            if not factor:
                continue
            m[r] = [v - factor * pv for v, pv in zip(m[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
    return m, pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(row_reduce(matrix)[1])


def nullspace(matrix, n_cols=None):
    """Basis of {v : matrix v = 0}, one vector per free column

    The vector for free column f has 1 in position f, 0 in the other
    free positions and is determined elsewhere by the reduced form.
    """
    if not matrix:
        assert n_cols is not None
        return [[ONE if i == f else ZERO for i in range(n_cols)]
                for f in range(n_cols)]
    rref, pivots = row_reduce(matrix)
    n_cols = len(rref[0])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        vector = [ZERO] * n_cols
        vector[f] = ONE
        for row, piv_c in enumerate(pivots):
            vector[piv_c] = -rref[row][f]
        basis.append(vector)
    logger.debug('nullspace: %d columns, rank %d', n_cols, len(pivots))
    return basis


def solve(matrix, rhs):
    """The unique solution of matrix v = rhs

    Raises DomainError when the system is inconsistent or the
    solution is not unique.
    """
    n_cols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rref, pivots = row_reduce(augmented)
    if n_cols in pivots:
        raise DomainError('linear system is inconsistent')
    if len(pivots) != n_cols:
        raise DomainError('linear system has %d free variables' % (n_cols - len(pivots)))
    return [rref[row][n_cols] for row in range(n_cols)]
