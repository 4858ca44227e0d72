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
Sparse polynomials in z and zb, in x = |z|^2, and in z, zb with
a formal rotation parameter t
"""

from weylharm.Scalar import GaussRational, ZERO, ONE, to_scalar, binomial

import logging
from fractions import Fraction

logger = logging.getLogger(__name__)

_SCALAR_TYPES = (int, Fraction, GaussRational)


class SparseTerms:

    """Immutable map from exponent keys to nonzero GaussRational coefficients

    Subclasses choose the key shape, how keys multiply and the
    canonical term order used for printing.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, value in dict(terms).items():
                value = to_scalar(value)
                if value:
                    clean[self._check_key(key)] = value
        object.__setattr__(self, '_terms', clean)
        object.__setattr__(self, '_hash', None)

    @classmethod
    def _from_clean(cls, terms):
        """Wrap a dict that is already free of zeros"""
        obj = object.__new__(cls)
        object.__setattr__(obj, '_terms', terms)
        object.__setattr__(obj, '_hash', None)
        return obj

    @staticmethod
    def _check_key(key):
        return key

    def __setattr__(self, name, value):
        raise AttributeError('%s is immutable' % type(self).__name__)

    @classmethod
    def constant(cls, value):
        return cls({cls.unit_key(): value})

    @classmethod
    def unit_key(cls):
        raise NotImplementedError

    @staticmethod
    def sort_key(key):
        raise NotImplementedError

    @staticmethod
    def _mul_keys(k1, k2):
        """Yield (key, integer factor) pairs for the product of two monomials"""
        raise NotImplementedError

    #
    # container protocol
    #
    @property
    def terms(self):
        """Copy of the coefficient map"""
        return dict(self._terms)

    def items(self):
        """Terms in canonical order"""
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def keys(self):
        return [key for key, _value in self.items()]

    def coefficient(self, key):
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.keys())

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if isinstance(other, _SCALAR_TYPES):
            return self == type(self).constant(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, '_hash', hash(
                (type(self).__name__, frozenset(self._terms.items()))))
        return self._hash

    #
    # linear structure
    #
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return type(self).constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, ZERO) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return type(self)._from_clean(result)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._from_clean({k: -v for k, v in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        """Multiply every coefficient by the scalar c"""
        c = to_scalar(c)
        if not c:
            return type(self)._from_clean({})
        return type(self)._from_clean({k: v * c for k, v in self._terms.items()})

    def map_coefficients(self, func):
        return type(self)({k: func(v) for k, v in self._terms.items()})

    def map_keys(self, func):
        """Relabel exponents; func must be injective"""
        result = {}
        for key, value in self._terms.items():
            new_key = func(key)
            assert new_key not in result
            result[new_key] = value
        return type(self)._from_clean(result)

    #
    # multiplication
    #
    def __mul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        result = {}
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                c = v1 * v2
                for key, factor in self._mul_keys(k1, k2):
                    result[key] = result.get(key, ZERO) + c * factor
        return type(self)({k: v for k, v in result.items() if v})

    def __rmul__(self, other):
        if isinstance(other, _SCALAR_TYPES):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = type(self).constant(ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return '%s(%r)' % (type(self).__name__, str(self))


class BiPoly(SparseTerms):

    """Polynomial in commuting z and zb; keys are exponent pairs (i, j)"""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        i, j = key
        assert i >= 0 and j >= 0, key
        return (int(i), int(j))

    @classmethod
    def unit_key(cls):
        return (0, 0)

    @staticmethod
    def sort_key(key):
        # graded by total degree, then higher powers of z first
        return (key[0] + key[1], -key[0])

    @staticmethod
    def _mul_keys(k1, k2):
        yield (k1[0] + k2[0], k1[1] + k2[1]), 1

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def z(cls):
        return cls.monomial(1, 0)

    @classmethod
    def zb(cls):
        return cls.monomial(0, 1)

    def degree(self):
        """Total degree, -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(i + j for (i, j) in self._terms)

    def evaluate_origin(self):
        """Value at z = zb = 0"""
        return self.coefficient((0, 0))

    def components(self):
        """Map m to the radial factor of the m-th component"""
        grouped = {}
        for (i, j), value in self._terms.items():
            grouped.setdefault(i - j, {})[min(i, j)] = value
        return {m: UniPoly._from_clean(terms) for m, terms in grouped.items()}

    def support(self):
        """Sorted list of m with a nonzero m-th component"""
        return sorted(set(i - j for (i, j) in self._terms))

    def __str__(self):
        from weylharm.Expression import format_poly
        return format_poly(self)


class UniPoly(SparseTerms):

    """Polynomial in one variable x; keys are exponents"""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        assert key >= 0, key
        return int(key)

    @classmethod
    def unit_key(cls):
        return 0

    @staticmethod
    def sort_key(key):
        return key

    @staticmethod
    def _mul_keys(k1, k2):
        yield k1 + k2, 1

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def x(cls):
        return cls.monomial(1)

    @classmethod
    def from_coefficients(cls, coefficients):
        """Build from the list [c0, c1, ...]"""
        return cls(dict(enumerate(coefficients)))

    def coefficients(self, length=None):
        """Dense list [c0, c1, ...] padded to length"""
        if length is None:
            length = self.degree() + 1
        return [self.coefficient(k) for k in range(length)]

    def degree(self):
        """Degree, -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(self._terms)

    def evaluate(self, x):
        """Horner evaluation at a scalar"""
        x = to_scalar(x)
        result = ZERO
        for k in range(self.degree(), -1, -1):
            result = result * x + self.coefficient(k)
        return result

    def compose(self, inner):
        """Return self(inner) for a UniPoly inner"""
        result = UniPoly()
        for k in range(self.degree(), -1, -1):
            result = result * inner + self.coefficient(k)
        return result

    def reflect(self):
        """Return self(1 - x)"""
        return self.compose(UniPoly({0: 1, 1: -1}))

    def derivative(self):
        return UniPoly({k - 1: v * k for k, v in self._terms.items() if k})

    def __str__(self):
        from weylharm.Expression import format_unipoly
        return format_unipoly(self)


class RotPoly(SparseTerms):

    """Polynomial in z, zb and the Laurent unit t; keys are (i, j, t_exp)"""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        i, j, t = key
        assert i >= 0 and j >= 0, key
        return (int(i), int(j), int(t))

    @classmethod
    def unit_key(cls):
        return (0, 0, 0)

    @staticmethod
    def sort_key(key):
        return (key[0] + key[1], -key[0], key[2])

    @staticmethod
    def _mul_keys(k1, k2):
        yield (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]), 1

    def slices(self):
        """Map each power of t to its BiPoly coefficient"""
        grouped = {}
        for (i, j, t), value in self._terms.items():
            grouped.setdefault(t, {})[(i, j)] = value
        return {t: BiPoly._from_clean(terms) for t, terms in grouped.items()}

    @classmethod
    def from_slices(cls, slices):
        """Inverse of slices()"""
        terms = {}
        for t, poly in slices.items():
            for (i, j), value in poly._terms.items():
                terms[(i, j, t)] = value
        return cls._from_clean(terms)

    def __str__(self):
        parts = []
        for t, poly in sorted(self.slices().items()):
            parts.append('(%s)*t^%d' % (poly, t))
        return ' + '.join(parts) if parts else '0'


#
# operations on BiPoly
#
def conjugate_swap(p):
    """p(zb, z): exchange the exponents, keep the coefficients"""
    return p.map_keys(lambda key: (key[1], key[0]))


def conjugate_full(p):
    """Complex conjugate of the function p: swap exponents and conjugate coefficients"""
    return BiPoly._from_clean({(j, i): value.conjugate()
                               for (i, j), value in p._terms.items()})


def component_project(p, m):
    """Radial factor phi with pi_m p = phi(|z|^2) xi_m"""
    return UniPoly._from_clean({min(i, j): value
                                for (i, j), value in p._terms.items()
                                if i - j == m})


def substitute_radial(f):
    """x -> z*zb"""
    return BiPoly._from_clean({(k, k): value for k, value in f._terms.items()})


def xi(m):
    """z^m for m >= 0 and zb^|m| for m < 0"""
    if m >= 0:
        return BiPoly.monomial(m, 0)
    return BiPoly.monomial(0, -m)


def radial_times_xi(f, m):
    """f(|z|^2) xi_m"""
    if m >= 0:
        return BiPoly._from_clean({(k + m, k): v for k, v in f._terms.items()})
    return BiPoly._from_clean({(k, k - m): v for k, v in f._terms.items()})


def from_components(components):
    """Inverse of BiPoly.components()"""
    result = BiPoly()
    for m, f in components.items():
        result = result + radial_times_xi(f, m)
    return result


def one_minus_radial_power(n):
    """(1 - |z|^2)^n, expanded"""
    return BiPoly._from_clean({(k, k): to_scalar((-1) ** k * binomial(n, k))
                               for k in range(n + 1)})


def e_basis(m, n):
    """e_{m,n} = (1 - |z|^2)^n xi_m"""
    assert n >= 0
    return radial_times_xi(component_project(one_minus_radial_power(n), 0), m)


def rotate_formal(p):
    """p(t z, zb / t) with t a formal unit"""
    return RotPoly._from_clean({(i, j, i - j): value
                                for (i, j), value in p._terms.items()})


def specialize_rotation(r):
    """Set t = 1"""
    result = BiPoly()
    for poly in r.slices().values():
        result = result + poly
    return result


def graded_monomials(max_degree):
    """All exponent pairs of total degree <= max_degree, in print order"""
    keys = [(i, d - i) for d in range(max_degree + 1) for i in range(d + 1)]
    return sorted(keys, key=BiPoly.sort_key)
