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
JSON encoding of scalars, polynomials, operators and decompositions

Numbers are never floats: a scalar is {"re": "p/q", "im": "r/s"}.
"""

from weylharm import ExpressionSyntaxError
from weylharm.Polynomial import BiPoly, UniPoly
from weylharm.Scalar import GaussRational, to_scalar
from weylharm.Weyl import WeylOp1, WeylOp2

import json
from fractions import Fraction

_TYPES = (('poly', BiPoly), ('unipoly', UniPoly), ('op', WeylOp2), ('ode', WeylOp1))


def _fraction_text(q):
    if 1 == q.denominator:
        return str(q.numerator)
    return '%d/%d' % (q.numerator, q.denominator)


def encode_scalar(x):
    x = to_scalar(x)
    return {'re': _fraction_text(x.re), 'im': _fraction_text(x.im)}


def decode_scalar(obj):
    try:
        return GaussRational(Fraction(obj['re']), Fraction(obj.get('im', '0')))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise ExpressionSyntaxError('invalid JSON scalar %r: %s' % (obj, e))


def encode_terms(value):
    """Typed object with the terms in canonical order"""
    for name, cls in _TYPES:
        if isinstance(value, cls):
            break
    else:
        raise TypeError('cannot encode %r' % (value,))
    terms = []
    for key, c in value.items():
        exponents = list(key) if isinstance(key, tuple) else [key]
        terms.append({'exponents': exponents, 'c': encode_scalar(c)})
    return {'type': name, 'terms': terms}


def decode_terms(obj):
    """Inverse of encode_terms"""
    classes = dict(_TYPES)
    try:
        cls = classes[obj['type']]
        terms = {}
        for term in obj['terms']:
            exponents = [int(k) for k in term['exponents']]
            key = exponents[0] if cls is UniPoly else tuple(exponents)
            terms[key] = decode_scalar(term['c'])
        return cls(terms)
    except (KeyError, TypeError, ValueError, AssertionError) as e:
        raise ExpressionSyntaxError('invalid JSON value: %s' % e)


def encode_almansi(decomposition):
    return {'layers': [encode_terms(q) for q in decomposition.layers]}


def encode_cellular(decomposition):
    """{"order": n, "layers": [...], "coeffs": [{"m", "j", "c"}, ...]}"""
    return {'order': decomposition.order,
            'layers': [encode_terms(w) for w in decomposition.layers],
            'coeffs': [{'m': m, 'j': j, 'c': encode_scalar(c)}
                       for (m, j, c) in decomposition.coefficient_rows()]}


def decode_cellular(obj):
    from weylharm.Cellular import CellularDecomposition
    try:
        coeffs = {(int(row['m']), int(row['j'])): decode_scalar(row['c'])
                  for row in obj['coeffs']}
        layers = tuple(decode_terms(layer) for layer in obj['layers'])
        return CellularDecomposition(int(obj['order']), coeffs, layers)
    except (KeyError, TypeError, ValueError) as e:
        raise ExpressionSyntaxError('invalid JSON decomposition: %s' % e)


def encode_gamma_coefficients(g):
    return {'gamma1': encode_scalar(g.gamma1),
            'gamma2': encode_scalar(g.gamma2),
            'coeffs': [{'m': m, 'c': encode_scalar(c)} for m, c in sorted(g.coeffs.items())]}


def encode_generator_expression(expression):
    return {'terms': [{'exponents': list(exponents), 'c': encode_scalar(c)}
                      for exponents, c in expression.items()]}


def dumps(obj):
    """Deterministic JSON text"""
    return json.dumps(obj, sort_keys=True)
