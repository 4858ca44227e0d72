# vim: ts=4:sw=4:expandtab
# -*- coding: UTF-8 -*-

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
Code that is commonly shared throughout weylharm
"""

import gettext
import locale
import os
import sys

from weylharm import Log
from configparser import RawConfigParser

APP_VERSION = "1.0.0"
APP_NAME = "weylharm"
APP_DESCRIPTION = "Exact arithmetic for rotation-invariant operators in the second Weyl algebra"

if sys.version_info < (3, 6, 0):
    print('weylharm requires Python 3.6 or newer.')
    sys.exit(1)

stdout_encoding = sys.stdout.encoding or 'utf-8'

logger = Log.init_log()

#
# Paths
#

# __file__ is absolute path to __init__.py
weylharm_exe_path = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# configuration
options_dir = None
if 'posix' == os.name:
    options_dir = os.path.expanduser("~/.config/weylharm")
elif 'nt' == os.name:
    options_dir = os.path.expandvars(r"${APPDATA}\weylharm")
else:
    options_dir = os.path.expanduser("~/.weylharm")

try:
    options_dir = os.environ['WEYLHARM_TEST_OPTIONS_DIR']
except KeyError:
    pass

options_file = os.path.join(options_dir, "weylharm.ini")

# locale directory
if os.path.exists("./locale/"):
    locale_dir = os.path.abspath("./locale/")
elif sys.platform == "win32":
    locale_dir = os.path.join(weylharm_exe_path, "share\\locale\\")
else:
    locale_dir = "/usr/share/locale/"


#
# gettext
#
try:
    (user_locale, encoding) = locale.getlocale()
except ValueError:
    logger.exception('error getting locale')
    user_locale = None
    encoding = None

if user_locale is None:
    user_locale = 'C'

try:
    if not os.path.exists(locale_dir):
        raise RuntimeError('translations not installed')
    t = gettext.translation('weylharm', locale_dir)
    _ = t.gettext
except (OSError, RuntimeError):
    def _(msg):
        """Dummy replacement for gettext"""
        return msg


#
# Exceptions
#

class WeylharmError(Exception):

    """Base class for errors reported to the user"""

    kind = 'error'


class DomainError(WeylharmError, ValueError):

    """Input is well formed but mathematically invalid"""

    kind = 'domain'


class NotInvariantError(DomainError):

    """Operator does not commute with rotations"""

    kind = 'not-invariant'


class NonTerminatingError(DomainError):

    """Hypergeometric parameters do not give a polynomial"""

    kind = 'non-terminating'


class NotAnnihilatedError(DomainError):

    """Polynomial is not in the kernel of the required operator"""

    kind = 'not-annihilated'


class ExpressionSyntaxError(WeylharmError):

    """Malformed expression text, annotated with the offset of the problem"""

    kind = 'syntax'

    def __init__(self, message, offset=0, source=None):
        WeylharmError.__init__(self, message)
        self.message = message
        self.offset = offset
        self.source = source

    def __str__(self):
        return '%s at offset %d' % (self.message, self.offset)
