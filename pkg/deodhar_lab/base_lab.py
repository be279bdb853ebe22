# python
#
# This file is part of the deodharLab distribution.
# Copyright (c) 2025 Oliver Albold.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.
#
"""
Module implements a base class for deodharLab front ends: ini file,
logging and the size guards of the exhaustive operations.
"""

import configparser
import logging
import logging.handlers
import os
import sys

from deodhar_lab.exact_algebra import parse_domain

#
# global constants
#
LOG_FILE_PATH = "log"
LOG_FILE_NAME = None
LOG_ROTATE_WHEN = "midnight"
LOG_BACKUP_COUNT = 5
GUARD_ENV = "DEODHAR_LAB_GUARD"
DEFAULT_GUARDS = {
    "maxEnumerateCells": 20,
    "maxToggleCells": 12,
    "maxClosureCells": 9,
    "maxCensusN": 8,
}
CELL_GUARDS = ("maxEnumerateCells", "maxToggleCells", "maxClosureCells")


#
# class definitions
#
class BaseLab:  # pylint: disable=too-many-instance-attributes
    """Implements the configuration and logging shared by all front ends"""

    def __init__(self, config_file):
        """
        Constructor takes config file as parameter (ini file) and defines global attributes
        """
        self.config_file = config_file

        # global config
        self.seed = 2024
        self.field_name = "rat"
        self.field = parse_domain(self.field_name)
        self.reading = "row"
        self.guards = dict(DEFAULT_GUARDS)

        # initialize logger
        self.log = logging.getLogger("DeodharLab")
        self.log_level = None
        self.log_file_handler = None
        logging.basicConfig()

        # read ini file
        self.read_config_file()
        self.read_guard_environment()

    def read_logging_config(self, config):
        """Read logging config from ini file"""
        self.log_level = config["logging"]["level"]
        if self.log_level.upper() in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            self.log.setLevel(self.log_level.upper())
            logging.getLogger("deodhar_lab").setLevel(self.log_level.upper())
        else:
            raise KeyError(self.log_level)

        # set default values
        log_file_path = LOG_FILE_PATH
        log_file_name = LOG_FILE_NAME
        log_file_backup = LOG_BACKUP_COUNT
        log_file_rotate = LOG_ROTATE_WHEN

        if "path" in config["logging"]:
            log_file_path = config["logging"]["path"]
        if "file" in config["logging"]:
            log_file_name = config["logging"]["file"]
        if "backup" in config["logging"]:
            log_file_backup = int(config["logging"]["backup"])
        if "rotate" in config["logging"]:
            log_file_rotate = config["logging"]["rotate"]

        if log_file_name is not None and log_file_name != "":
            # create log file path and file logger
            try:
                os.makedirs(log_file_path)
                self.log.debug("Logging directory created: ./%s", log_file_path)
            except FileExistsError:
                self.log.debug("Logging directory exist already: ./%s", log_file_path)
            except OSError:
                self.log.error("Can not create Logging directory: ./%s", log_file_path)

            # create time rotating logger for log files
            self.log_file_handler = logging.handlers.TimedRotatingFileHandler(
                os.path.join(log_file_path, log_file_name), when=log_file_rotate, backupCount=log_file_backup
            )
            self.log_file_handler.setFormatter(logging.Formatter("%(asctime)s-%(name)s-%(levelname)s-%(message)s"))
            self.log.addHandler(self.log_file_handler)
            logging.getLogger("deodhar_lab").addHandler(self.log_file_handler)

    def read_config_file(self):
        """
        Reads the configured ini file and sets attributes based on the config
        and sets up the logger
        """
        config = configparser.ConfigParser()

        # try to open ini file
        try:
            if os.path.exists(self.config_file) is False:
                self.log.critical("Config file not found '%s'!", self.config_file)
                return
            config.read(self.config_file)
        except OSError:
            self.log.error("Error while reading ini file: %s", self.config_file)
            sys.exit(1)

        # read ini file values
        try:
            self.read_logging_config(config)

            if "guards" in config:
                for key in DEFAULT_GUARDS:
                    if key in config["guards"]:
                        self.guards[key] = int(config["guards"][key])
            if "global" in config:
                self.seed = int(config["global"].get("seed", self.seed))
                self.field_name = config["global"].get("field", self.field_name)
                self.field = parse_domain(self.field_name)
                self.reading = config["global"].get("reading", self.reading)
                if self.reading not in ("row", "col"):
                    raise KeyError(self.reading)

            # call back for additional config data
            self.read_lab_config(config)

        except (KeyError, ValueError) as inst:
            self.log.error("Error while reading ini file: %s", inst)
            sys.exit(1)

    def read_guard_environment(self):
        """DEODHAR_LAB_GUARD overrides every cell guard"""
        value = os.environ.get(GUARD_ENV)
        if value is None or value == "":
            return
        try:
            guard = int(value)
        except ValueError:
            self.log.warning("Ignoring %s=%s, not an integer", GUARD_ENV, value)
            return
        self.log.warning("Cell guards overridden by %s=%d", GUARD_ENV, guard)
        for key in CELL_GUARDS:
            self.guards[key] = guard

    def override_guard(self, key, value):
        """Command line guard flags win over ini file and environment"""
        if value is not None:
            self.log.warning("Guard %s set to %d", key, value)
            self.guards[key] = value

    def read_lab_config(self, config):
        """This method can be overwritten to read more config data from ini file"""
