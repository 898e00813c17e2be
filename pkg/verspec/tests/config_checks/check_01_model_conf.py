# -*- coding: utf-8 -*-
"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.

"""

"""
Model configuration check.

Shows the model data, and what is missing or inconsistent between strata, fiber tables, branes and the normal crossing divisor.
"""
import verspec  # default config bootstrap

from verspec import conf
from verspec.cfun import conic_fiber_table
from verspec.q7 import parse_fiber_tables

from verspec.util.log import DEBUG, get_logger
log = get_logger('tests')
log.setLevel(DEBUG)


def test_show_config():

    log.debug('Starting')
    log.debug('Strata: ')
    for k, v in conf.strata.items():
        log.info('{} -> {}'.format(k, v))
    log.debug('Fiber tables: ')
    for k, v in conf.fiber_tables.items():
        log.info('{} -> {}'.format(k, v))


def test_tables_use_known_strata():

    log.debug('- Testing fiber table strata (model conf)...')

    tables = parse_fiber_tables(conf.fiber_tables)
    unknown = {name for table in tables.values() for name in table.strata if name not in conf.strata}
    if unknown:
        log.warning('\tFAILED: Unknown strata in fiber_tables: {}'.format(unknown))
    else:
        log.info('\tOK: All fiber table strata are defined.')
    assert not unknown


def test_normal_crossing_has_tables():

    log.debug('- Testing the normal crossing components against the fiber tables...')

    names = [name for name, _ in conf.normal_crossing['components']] + [conf.normal_crossing.get('intersection')]
    missing = [name for name in names if name and name not in conf.fiber_tables]
    if missing:
        log.warning('\tFAILED: No fiber table for {}'.format(missing))
    else:
        log.info('\tOK: Every component and the intersection have a fiber table.')
    assert not missing


def test_conic_ranks():

    log.debug('- Testing the conic ranks against the fiber tables...')

    tables = parse_fiber_tables(conf.fiber_tables)
    for name, ranks in conf.conic_ranks.items():
        derived = conic_fiber_table(ranks)
        if derived != tables[name]:
            log.warning('\tFAILED: conic ranks of {} give {}, configured {}'.format(name, derived.to_list(), tables[name].to_list()))
        else:
            log.info('\tOK: {} table re-derived from conic ranks.'.format(name))
        assert derived == tables[name]


def test_branes():

    log.debug('- Testing brane data...')

    for name, brane in conf.branes.items():
        assert name in conf.strata
        singular = brane.get('singular_on_orientifold')
        assert singular is None or singular in conf.strata
    assert conf.orientifold in conf.strata
    log.info('\tOK: branes and orientifold are strata.')


if __name__ == '__main__':

    test_show_config()
    test_tables_use_known_strata()
    test_normal_crossing_has_tables()
    test_conic_ranks()
    test_branes()
