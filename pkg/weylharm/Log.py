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
Logging
"""

import logging
import sys


def is_debugging_enabled_via_cli(argv=None):
    """Return boolean whether user required debugging on the command line"""
    if argv is None:
        argv = sys.argv
    return any(arg.startswith('--debug') for arg in argv)


def init_log():
    """Set up the package logger

    This is one of the first steps in __init__
    """
    logger = logging.getLogger('weylharm')
    if is_debugging_enabled_via_cli():
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)
    # importing twice, as the test runner may do, must not double the output
    if not any(getattr(h, '_weylharm', False) for h in logger.handlers):
        logger_sh = logging.StreamHandler()
        logger_sh._weylharm = True
        logger.addHandler(logger_sh)
    return logger


def set_root_log_level(is_debug=False):
    """Adjust the package log level

    This runs later in the startup process when the
    configuration is loaded.
    """
    root_logger = logging.getLogger('weylharm')
    root_logger.setLevel(logging.DEBUG if is_debug else logging.INFO)


def add_file_handler(filename):
    """Copy log messages of every level to a file and return the handler"""
    handler = logging.FileHandler(filename, encoding='utf-8')
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(
        '%(asctime)s %(name)s %(levelname)s %(message)s'))
    logging.getLogger('weylharm').addHandler(handler)
    return handler
