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
Test case for module Log
"""

from weylharm.Log import *
from tests import common

import logging
import os
import unittest


class LogTestCase(common.WeylharmTestCase):
    """Test case for module Log"""

    def test_is_debugging_enabled_via_cli(self):
        """Unit test for is_debugging_enabled_via_cli"""
        self.assertTrue(is_debugging_enabled_via_cli(['weylharm', '--debug', 'order', 'z']))
        self.assertTrue(is_debugging_enabled_via_cli(['weylharm', '--debug-log', 'f.log']))
        self.assertFalse(is_debugging_enabled_via_cli(['weylharm', 'order', 'z']))

    def test_init_log(self):
        """Repeated initialization keeps a single console handler"""
        logger = init_log()
        count = len(logger.handlers)
        self.assertIs(init_log(), logger)
        self.assertEqual(len(logger.handlers), count)

    def test_set_root_log_level(self):
        logger = logging.getLogger('weylharm')
        level = logger.level
        try:
            set_root_log_level(True)
            self.assertEqual(logger.level, logging.DEBUG)
            set_root_log_level(False)
            self.assertEqual(logger.level, logging.INFO)
        finally:
            logger.setLevel(level)

    def test_add_file_handler(self):
        """Messages from package modules reach the log file"""
        filename = os.path.join(self.tempdir, 'weylharm.log')
        handler = add_file_handler(filename)
        logger = logging.getLogger('weylharm')
        level = logger.level
        try:
            set_root_log_level(True)
            logging.getLogger('weylharm.Cellular').debug('cellular layers ready')
        finally:
            logger.removeHandler(handler)
            handler.close()
            logger.setLevel(level)
        with open(filename, encoding='utf-8') as f:
            contents = f.read()
        self.assertIn('weylharm.Cellular DEBUG cellular layers ready', contents)


if __name__ == '__main__':
    unittest.main()
