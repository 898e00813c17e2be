# -*- coding: utf-8 -*-
# type: ignore
"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
import importlib
import inspect

from verspec.util.log import debug, info

# stubs that are replaced by imports
hypersurface_class = (3, 2)
strata = {}
fiber_tables = {}
conic_ranks = {}
normal_crossing = {}
orientifold = "O"
branes = {}
double_cover = {}
numeric_matrix = []
formal_dims = []
oracle_spaces = {}
oracle_expected = {}
notes = {}

try:
    module = importlib.import_module('verspec_model_conf')
except ModuleNotFoundError as e:

    try:
        import sys
        from verspec.conf.global_conf import default_model_conf_path, model_conf_using_demo_configuration_message
        sys.path.append(str(default_model_conf_path))
        module = importlib.import_module('verspec_model_conf')
        info(model_conf_using_demo_configuration_message)

    except Exception as e:
        from verspec.conf.global_conf import model_conf_import_error_message
        problem = model_conf_import_error_message.format(module='verspec_model_conf')
        print(problem)
        raise Exception(problem)

__all__ = []
for name, value in inspect.getmembers(module):
    if name.startswith('__'):
        continue

    globals()[name] = value
    __all__.append(name)

debug(f"Model conf loaded from {module.__file__}: {sorted(__all__)}")

if __name__ == '__main__':

    from pprint import pprint

    pprint({k: globals()[k] for k in __all__})
