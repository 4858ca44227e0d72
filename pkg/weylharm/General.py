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
General code
"""

import logging
import os
import subprocess

import weylharm

logger = logging.getLogger(__name__)


def boolstr_to_bool(value):
    """Convert a string boolean to a Python boolean"""
    lowered = value.strip().lower()
    if lowered in ('true', 't', '1', 'yes'):
        return True
    if lowered in ('false', 'f', '0', 'no', ''):
        return False
    raise ValueError("Invalid boolean: '%s'" % value)


def env_flag(name):
    """Return the boolean value of an environment variable, or None if unset"""
    value = os.getenv(name)
    if value is None:
        return None
    try:
        return boolstr_to_bool(value)
    except ValueError:
        logger.warning('ignoring invalid value for %s: %s', name, value)
        return None


def makedirs(path):
    """Make directory recursively.
    'Path' should not end in a delimiter."""
    logger.debug('makedirs(%s)', path)
    if os.path.lexists(path):
        return
    parentdir = os.path.split(path)[0]
    if parentdir and not os.path.lexists(parentdir):
        makedirs(parentdir)
    os.mkdir(path, 0o700)


def run_external(args, stdin_text=None, env=None, clean_env=True):
    """Run external command and return (return code, stdout, stderr)"""
    logger.debug('running cmd ' + ' '.join(args))
    if not env and clean_env and 'posix' == os.name:
        # subprocesses answer in English so tests can look for strings
        keep_env = ('PATH', 'HOME', 'LD_LIBRARY_PATH', 'TMPDIR', 'PYTHONPATH',
                    'WEYLHARM_TEST_OPTIONS_DIR')
        env = {key: value for key, value in os.environ.items()
               if key in keep_env}
        env['LANG'] = 'C'
        env['LC_ALL'] = 'C'
    p = subprocess.Popen(args, stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                         stderr=subprocess.PIPE, env=env)
    try:
        out = p.communicate(
            stdin_text.encode('utf-8') if stdin_text is not None else None)
    except KeyboardInterrupt:
        out = p.communicate()
        raise
    encoding = weylharm.stdout_encoding
    return (p.returncode,
            str(out[0], encoding=encoding) if out[0] else '',
            str(out[1], encoding=encoding) if out[1] else '')
