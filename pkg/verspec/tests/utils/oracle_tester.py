"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from fractions import Fraction

from verspec import conf
from verspec.cclass import euler_characteristic_of
from verspec.util.log import DEBUG, get_logger

log = get_logger("verspec_tests", color=False)
log.setLevel(DEBUG)


def check_oracle(name, expected=None):
    """
    Test protocol for a named oracle space: its Euler characteristic, computed by the engine,
    against the classical value (configured in oracle_expected, unless given).
    """
    if expected is None:
        expected = conf.oracle_expected[name]

    log.info('Testing: "{}"'.format(name))
    chi = euler_characteristic_of(name)
    assert isinstance(chi, Fraction)
    if chi != expected:
        log.error('chi("{}") = {}, expected {}'.format(name, chi, expected))
    assert chi == expected
    log.info('OK: chi("{}") = {}'.format(name, chi))


def check_oracles(names=None):
    names = names or sorted(conf.oracle_expected)
    for name in names:
        check_oracle(name)
