# -*- coding: utf-8 -*-
"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Optional

import json
from pathlib import Path

from verspec.util.log import debug, error
from verspec.util.exception import UsageError

from verspec.conf.global_conf import user_app_folder_name, user_conf_file_name


def get_user_config_path() -> Path:
    """
    Defines the user configuration path (including the json file).
    Relies on Path.home()

    On windows, some python hosts return "Documents" as home.
    This is unified to be the parent of "Documents".
    """
    home = Path.home()
    if home.name == "Documents" and home.parent.exists():
        home = home.parent
    return home / user_app_folder_name / user_conf_file_name


user_config_path = get_user_config_path()


class ConfigIO:
    """
    Writer and Reader for a json configuration file.

    Used for the user configuration (persisted command line defaults)
    and for run configuration files given with --config.

    The file is only created when something is saved.
    """

    def __init__(self, conf_path: str | Path = user_config_path, strict: bool = False):
        """
        Args:
            conf_path: path of the json file
            strict: if True, a missing or malformed file raises a UsageError,
                    otherwise it reads as an empty configuration.
        """
        self.conf_path = Path(conf_path)
        self.strict = strict

    def save(self, key: str, value: Any = None) -> None:

        data = self.read() or {}

        if value is None:
            data.pop(key, None)  # remove the key if None
        else:
            data[key] = value

        self.conf_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.conf_path, 'w') as conf_file:
            json.dump(data, conf_file, indent=2, sort_keys=True)

    def read(self, key: Optional[str] = None, default: Any = None) -> Any:

        data = {}
        if not self.conf_path.exists():
            if self.strict:
                raise UsageError(f'Configuration file not found: "{self.conf_path}"')
            debug(f"No configuration file at {self.conf_path}")
        else:
            try:
                with open(self.conf_path) as conf_file:
                    data = json.load(conf_file)
            except Exception as e:
                if self.strict:
                    raise UsageError(f'Unreadable configuration file "{self.conf_path}": {e}')
                error(f'Problem reading Conf file : {e}')

            if not isinstance(data, dict):
                if self.strict:
                    raise UsageError(f'Configuration file "{self.conf_path}" must hold a json object')
                data = {}

        if key is None:
            return data
        else:
            return data.get(key, default)

    def __str__(self):
        return f'[verspec.{self.__class__.__name__} -- "{self.conf_path}"]'


if __name__ == '__main__':

    from verspec.util import log
    log.setLevel(log.INFO)
    log.info('Path is : {}'.format(user_config_path))
    cfio = ConfigIO()
    log.info(cfio.read())
