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
Common code for unit tests
"""

import os
import random
import shutil
import sys
import tempfile
import unittest
from fractions import Fraction

import mock

import weylharm
import weylharm.Options
from weylharm.Polynomial import BiPoly, UniPoly
from weylharm.Scalar import GaussRational
from weylharm.Weyl import WeylOp2


class WeylharmTestCase(unittest.TestCase):
    """TestCase class with exact asserts and seeded random values"""
    _patchers = []

    @classmethod
    def setUpClass(cls):
        """Create a temporary directory for the testcase"""
        cls.tempdir = tempfile.mkdtemp(prefix=cls.__name__)
        if 'WEYLHARM_TEST_OPTIONS_DIR' not in os.environ:
            cls._patch_options_paths()

    @classmethod
    def _patch_options_paths(cls):
        to_patch = [('weylharm.options_dir', cls.tempdir),
                    ('weylharm.options_file', os.path.join(cls.tempdir, "weylharm.ini"))]
        for target, source in to_patch:
            patcher = mock.patch(target, source)
            patcher.start()
            cls._patchers.append(patcher)

        weylharm.Options.options.restore()

    @classmethod
    def tearDownClass(cls):
        """remove the temporary directory"""
        if os.path.exists(cls.tempdir):
            shutil.rmtree(cls.tempdir)
        if 'WEYLHARM_TEST_OPTIONS_DIR' not in os.environ:
            cls._stop_patch_options_paths()

    @classmethod
    def _stop_patch_options_paths(cls):
        for patcher in cls._patchers:
            patcher.stop()
        cls._patchers = []

    def setUp(self):
        """Call before each test method"""
        basedir = os.path.join(os.path.dirname(__file__), '..')
        os.chdir(basedir)
        self.rng = random.Random(self.id())

    #
    # exact asserts
    #
    def assertPolyEqual(self, actual, expected, msg=None):
        """Compare two BiPoly or UniPoly values term by term"""
        if actual != expected:
            standard = 'got %s, expected %s' % (actual, expected)
            self.fail(self._formatMessage(msg, standard))

    def assertOpEqual(self, actual, expected, msg=None):
        """Compare two WeylOp2 or WeylOp1 values in canonical form"""
        if actual != expected:
            standard = 'got %s, expected %s' % (actual, expected)
            self.fail(self._formatMessage(msg, standard))

    def assertIsZero(self, value, msg=None):
        if value:
            self.fail(self._formatMessage(msg, '%s is not zero' % (value,)))

    #
    # seeded random values
    #
    def random_rational(self, size=5):
        num = self.rng.randint(-size, size)
        return Fraction(num, self.rng.randint(1, size))

    def random_scalar(self, size=5, complex_=True):
        """Nonzero Gaussian rational"""
        while True:
            im = self.random_rational(size) if complex_ and self.rng.random() < 0.3 else 0
            value = GaussRational(self.random_rational(size), im)
            if value:
                return value

    def random_poly(self, max_degree=4, n_terms=4):
        terms = {}
        for _k in range(n_terms):
            i = self.rng.randint(0, max_degree)
            j = self.rng.randint(0, max_degree - i)
            terms[(i, j)] = self.random_scalar()
        return BiPoly(terms)

    def random_polyharmonic(self, order, max_degree, n_terms=4):
        """Random nonzero p with every monomial z^i zb^j having min(i, j) < order"""
        assert order >= 1
        while True:
            terms = {}
            for _k in range(n_terms):
                low = self.rng.randint(0, min(order - 1, max_degree // 2))
                high = self.rng.randint(low, max_degree - low)
                key = (high, low) if self.rng.random() < 0.5 else (low, high)
                terms[key] = self.random_scalar()
            p = BiPoly(terms)
            if p:
                return p

    def random_unipoly(self, max_degree=4):
        return UniPoly({k: self.random_scalar() for k in range(self.rng.randint(0, max_degree) + 1)
                        if self.rng.random() < 0.7})

    def random_op(self, max_order=3, n_terms=4, max_coefficient_degree=3):
        terms = {}
        for _k in range(n_terms):
            a2 = self.rng.randint(0, max_order)
            b2 = self.rng.randint(0, max_order - a2)
            a1 = self.rng.randint(0, max_coefficient_degree)
            b1 = self.rng.randint(0, max_coefficient_degree)
            terms[(a1, b1, a2, b2)] = self.random_scalar()
        return WeylOp2(terms)

    def random_invariant_op(self, max_order=3, n_terms=4, max_shift=2):
        """Random operator whose terms all satisfy a1 - a2 == b1 - b2"""
        terms = {}
        for _k in range(n_terms):
            a2 = self.rng.randint(0, max_order)
            b2 = self.rng.randint(0, max_order - a2)
            shift = self.rng.randint(-min(a2, b2), max_shift)
            terms[(a2 + shift, b2 + shift, a2, b2)] = self.random_scalar()
        return WeylOp2(terms)


def get_env(key):
    """Get an environment variable. If not set, returns None instead of KeyError."""
    if key not in os.environ:
        return None
    return os.environ[key]


def skipIfWindows(f):
    """Skip unit test if running on Windows"""
    return unittest.skipIf('win32' == sys.platform, 'running on Windows')(f)
