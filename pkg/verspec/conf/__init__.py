# -*- coding: utf-8 -*-
"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from verspec.conf.global_conf import *

# user config
from verspec.conf.configio import ConfigIO

try:
    from verspec.conf.model_conf_load import *
except Exception as e:
    raise Exception(f'\nException during config import: \n{e}\n\n'
                    'Unable to import the model configuration (verspec_model_conf). \n'
                    'Please check the file compatibility with the latest verspec version.')


def set(key, value, save=True):
    """
    Sets a variable "key" with given "value" as a config variable.

    If the variable exists in the current config, its value is overridden.

    If save is True (the default), the variable is saved into the user config, and persisted
    (unless the config file is wiped).

    Example :

    conf.set('default_base', 'P2')
    # "verify" without --base now runs over P2
    """
    globals()[key] = value
    if save:
        user_conf.save(key, value)


def get(key, default=None):
    """
    Gets a value from the config, or default if not set.
    """
    return globals().get(key, default)


user_conf = ConfigIO()
globals().update(user_conf.read())
