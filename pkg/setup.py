#!/usr/bin/env python
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
Build weylharm tarballs
"""

import glob
import os
import sys
from setuptools import setup

import weylharm


def clean_dist_locale():
    """Clean dist/usr/share/locale"""
    tree_dir = 'dist/usr/share/locale'
    if os.path.exists(tree_dir):
        import shutil
        shutil.rmtree(tree_dir)


def run_setup():
    setup(name='weylharm',
          version=weylharm.APP_VERSION,
          description=weylharm.APP_NAME,
          long_description=weylharm.APP_DESCRIPTION,
          author="The weylharm developers",
          license="GPLv3",
          platforms='Linux and Windows; Python v3.6+',
          packages=['weylharm'],
          scripts=['weylharm.py'],
          data_files=[('share/locale/%s/LC_MESSAGES' % os.path.basename(os.path.dirname(os.path.dirname(mo))),
                       [mo]) for mo in glob.glob('locale/*/LC_MESSAGES/weylharm.mo')],
          tests_require=['mock', 'sympy'],
          test_suite='tests')


if __name__ == '__main__':
    if 2 == len(sys.argv) and sys.argv[1] == 'clean-dist':
        clean_dist_locale()
    else:
        run_setup()
