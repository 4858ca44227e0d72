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
Exact scalars: rationals and Gaussian rationals, with the
combinatorial numbers the other modules are built from
"""

from weylharm import ExpressionSyntaxError

import math
import re
from fractions import Fraction
from functools import lru_cache

# Rationals are the standard library's: always normalized, positive
# denominator, zero is 0/1.
Rational = Fraction

_RATIONAL_TYPES = (int, Fraction)


class GaussRational:

    """Exact complex number re + im*i with rational parts

    Instances are immutable and hashable. A GaussRational with zero
    imaginary part compares and hashes equal to the matching int or
    Fraction.
    """

    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRational):
            assert 0 == im
            self._re = re._re
            self._im = re._im
            return
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    def __setattr__(self, name, value):
        if hasattr(self, '_im'):
            raise AttributeError('GaussRational is immutable')
        object.__setattr__(self, name, value)

    @staticmethod
    def _make(re, im):
        """Build from two Fractions without coercion"""
        x = object.__new__(GaussRational)
        object.__setattr__(x, '_re', re)
        object.__setattr__(x, '_im', im)
        return x

    #
    # arithmetic
    #
    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational._make(self._re + other._re, self._im + other._im)
        if isinstance(other, _RATIONAL_TYPES):
            return GaussRational._make(self._re + other, self._im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational._make(self._re - other._re, self._im - other._im)
        if isinstance(other, _RATIONAL_TYPES):
            return GaussRational._make(self._re - other, self._im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return GaussRational._make(other - self._re, -self._im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            if not self._im and not other._im:
                return GaussRational._make(self._re * other._re, Fraction(0))
            return GaussRational._make(self._re * other._re - self._im * other._im,
                                       self._re * other._im + self._im * other._re)
        if isinstance(other, _RATIONAL_TYPES):
            return GaussRational._make(self._re * other, self._im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            if 0 == other:
                raise ZeroDivisionError('GaussRational division by zero')
            return GaussRational._make(self._re / other, self._im / other)
        if not isinstance(other, GaussRational):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return self.reciprocal() * other
        return NotImplemented

    def reciprocal(self):
        """Return 1/self"""
        norm = self.norm()
        if 0 == norm:
            raise ZeroDivisionError('GaussRational division by zero')
        return GaussRational._make(self._re / norm, -self._im / norm)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return GaussRational._make(-self._re, -self._im)

    def __pos__(self):
        return self

    def conjugate(self):
        """Complex conjugate"""
        return GaussRational._make(self._re, -self._im)

    def norm(self):
        """Squared modulus re^2 + im^2, a nonnegative Fraction"""
        return self._re * self._re + self._im * self._im

    #
    # comparison and classification
    #
    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, _RATIONAL_TYPES):
            return 0 == self._im and self._re == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def is_real(self):
        return 0 == self._im

    def is_integer(self):
        return 0 == self._im and 1 == self._re.denominator

    def is_natural(self):
        """True for 0, 1, 2, ..."""
        return self.is_integer() and self._re >= 0

    def is_nonpositive_integer(self):
        """True for 0, -1, -2, ..."""
        return self.is_integer() and self._re <= 0

    def as_integer(self):
        """Return the value as int, or raise ValueError"""
        if not self.is_integer():
            raise ValueError('not an integer: %s' % self)
        return self._re.numerator

    def bit_length(self):
        """Size of the largest numerator, used to choose cheap pivots"""
        return max(abs(self._re.numerator).bit_length(),
                   abs(self._im.numerator).bit_length())

    def is_negative_looking(self):
        """True when the printed form starts with a minus sign"""
        if self._re:
            return self._re < 0
        return self._im < 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "GaussRational('%s')" % format_scalar(self)


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def to_scalar(value):
    """Coerce int, Fraction, str or GaussRational to GaussRational"""
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, _RATIONAL_TYPES):
        return GaussRational(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError('cannot convert %r to a scalar' % (value,))


#
# text form
#
def _format_fraction(q):
    if 1 == q.denominator:
        return str(q.numerator)
    return '%d/%d' % (q.numerator, q.denominator)


def _format_imaginary(q):
    """Imaginary part q*i, including its sign"""
    if 1 == q:
        return 'i'
    if -1 == q:
        return '-i'
    return '%s*i' % _format_fraction(q)


def format_scalar(x):
    """Text form: 3, -3/2, 3/2*i, 1/2+3/2*i, 1-i"""
    x = to_scalar(x)
    if not x.im:
        return _format_fraction(x.re)
    if not x.re:
        return _format_imaginary(x.im)
    imag = _format_imaginary(x.im)
    if not imag.startswith('-'):
        imag = '+' + imag
    return _format_fraction(x.re) + imag


_RATIONAL_RE = r'[0-9]+(?:/[0-9]+)?'
_SCALAR_RE = re.compile(
    r'^(?P<re>[-+]?' + _RATIONAL_RE + r')?'
    r'(?:(?P<sign>[-+]?)(?:(?P<im>' + _RATIONAL_RE + r')\*)?i)?$')


def _parse_fraction(text, offset, source):
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ExpressionSyntaxError('zero denominator', offset, source)


def parse_scalar(src):
    """Parse the text form written by format_scalar"""
    text = src.strip()
    match = _SCALAR_RE.match(text)
    ok = match is not None and text != ''
    if ok:
        has_imag = text.endswith('i')
        if match.group('re') and has_imag and not match.group('sign'):
            # '2i' is not a sum
            ok = False
    if not ok:
        raise ExpressionSyntaxError('invalid scalar %r' % src, 0, src)
    real = _parse_fraction(match.group('re'), 0, src) if match.group('re') else Fraction(0)
    imag = Fraction(0)
    if text.endswith('i'):
        imag = _parse_fraction(match.group('im'), 0, src) if match.group('im') else Fraction(1)
        if '-' == match.group('sign'):
            imag = -imag
    return GaussRational(real, imag)


#
# combinatorics
#
def pochhammer(a, n):
    """Rising factorial (a)_n = a(a+1)...(a+n-1), and 1 for n = 0"""
    assert n >= 0
    a = to_scalar(a)
    result = ONE
    for k in range(n):
        result = result * (a + k)
        if not result:
            break
    return result


def falling_factorial(a, n):
    """a(a-1)...(a-n+1) for an integer a"""
    assert n >= 0
    result = 1
    for k in range(n):
        result *= a - k
    return result


@lru_cache(maxsize=64)
def stirling_row(n):
    """Signed Stirling numbers s(n, 0) ... s(n, n)

    Rows are built from s(0, 0) = 1 upwards with
    s(k, m) = s(k-1, m-1) - (k-1) s(k-1, m).
    """
    assert n >= 0
    row = [1]
    for k in range(1, n + 1):
        previous = row
        row = [0] * (k + 1)
        for m in range(1, k + 1):
            row[m] = previous[m - 1]
            if m < k:
                row[m] -= (k - 1) * previous[m]
    return tuple(row)


def stirling_first(n, m):
    """Signed Stirling number of the first kind

    The coefficient of x^m in x(x-1)...(x-n+1).
    """
    assert n >= 0 and m >= 0
    if m > n:
        return 0
    return stirling_row(n)[m]


def binomial(n, k):
    """Binomial coefficient, 0 when k > n"""
    assert n >= 0 and k >= 0
    return math.comb(n, k) if hasattr(math, 'comb') else _binomial(n, k)


def _binomial(n, k):
    if k > n:
        return 0
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


def factorial(n):
    return math.factorial(n)
