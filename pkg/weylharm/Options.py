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
Store and retrieve user preferences
"""

import weylharm
from weylharm import General
from weylharm import _

import configparser
import logging
import os

logger = logging.getLogger(__name__)


boolean_keys = ['cache',
                'debug',
                'json']
int_keys = ['kernel_max_degree']

SECTION = 'weylharm'


class Options:

    """Store and retrieve user preferences"""

    def __init__(self):
        self.config = weylharm.RawConfigParser()
        self.config.BOOLEAN_STATES['t'] = True
        self.config.BOOLEAN_STATES['f'] = False
        self.restore()

    def __flush(self):
        """Write information to disk"""
        if not os.path.exists(weylharm.options_dir):
            General.makedirs(weylharm.options_dir)
        with open(weylharm.options_file, 'w', encoding='utf-8-sig') as _file:
            try:
                self.config.write(_file)
            except IOError as e:
                from errno import ENOSPC
                if e.errno == ENOSPC:
                    logger.error(
                        _("Disk was full when writing configuration to file %s"), weylharm.options_file)
                else:
                    raise

    def __set_default(self, key, value):
        """Set the default value"""
        if not self.config.has_option(SECTION, key):
            self.set(key, value, commit=False)

    def get(self, option, section=SECTION):
        """Retrieve a general option"""
        if section == SECTION and option == 'debug':
            from weylharm.Log import is_debugging_enabled_via_cli
            if is_debugging_enabled_via_cli():
                # command line overrides stored configuration
                return True
        if option in boolean_keys:
            return self.config.getboolean(section, option)
        elif option in int_keys:
            return self.config.getint(section, option)
        return self.config.get(section, option)

    def is_corrupt(self):
        """Perform a self-check for corruption of the configuration"""
        for boolean_key in boolean_keys:
            try:
                if self.config.has_option(SECTION, boolean_key):
                    self.config.getboolean(SECTION, boolean_key)
            except ValueError:
                return True
        for int_key in int_keys:
            try:
                if self.config.has_option(SECTION, int_key):
                    self.config.getint(SECTION, int_key)
            except ValueError:
                return True
        return False

    def restore(self):
        """Restore saved options from disk"""
        try:
            self.config.read(weylharm.options_file, encoding='utf-8-sig')
        except configparser.Error:
            logger.warning(
                _("Error reading configuration file %s"), weylharm.options_file, exc_info=True)
        if not self.config.has_section(SECTION):
            self.config.add_section(SECTION)

        if self.is_corrupt():
            logger.warning(
                _("Ignoring invalid values in configuration file %s"), weylharm.options_file)
            for key in boolean_keys + int_keys:
                self.config.remove_option(SECTION, key)

        # set defaults
        self.__set_default("cache", True)
        self.__set_default("debug", False)
        self.__set_default("json", False)
        self.__set_default("kernel_max_degree", 4)

        self.set("version", weylharm.APP_VERSION, commit=False)

    def set(self, key, value, section=SECTION, commit=True):
        """Set a general option"""
        if not self.config.has_section(section):
            self.config.add_section(section)
        self.config.set(section, key, str(value))
        if commit:
            self.__flush()

    def commit(self):
        self.__flush()


options = Options()
