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
Show system information
"""

import weylharm

import locale
import os
import platform
import sys


def get_system_information():
    """Return system information as a string"""
    # this section is for application and library versions
    s = "weylharm version %s" % weylharm.APP_VERSION
    try:
        import sympy
        s += '\nsympy version %s' % sympy.__version__
    except ImportError:
        pass

    # this section is for variables defined in __init__.py
    s += "\nlocale_dir = %s" % weylharm.locale_dir
    s += "\noptions_dir = %s" % weylharm.options_dir
    s += "\noptions_file = %s" % weylharm.options_file

    # this section is for the configuration and the environment
    from weylharm.Options import options
    for key in ('cache', 'debug', 'json', 'kernel_max_degree'):
        s += "\noptions.get('%s') = %s" % (key, options.get(key))
    s += "\nlocale.getlocale = %s" % str(locale.getlocale())
    for env in ('WEYLHARM_JSON', 'WEYLHARM_TEST_OPTIONS_DIR', 'LANG'):
        s += "\nos.getenv('%s') = %s" % (env, os.getenv(env))
    s += "\nos.path.expanduser('~') = %s" % os.path.expanduser('~')
    s += "\nplatform.platform = %s" % platform.platform()
    s += "\nplatform.python_implementation = %s" % platform.python_implementation()
    s += "\nsys.argv = %s" % sys.argv
    s += "\nsys.executable = %s" % sys.executable
    s += "\nsys.version = %s" % sys.version
    s += "\n__file__ = %s" % __file__

    return s
