"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from verspec import conf
from verspec.q7 import BaseSpec, VariantFlags, build_model, verify
from verspec.tests import Timer
from verspec.util.log import DEBUG, get_logger

log = get_logger("verspec_tests", color=False)
log.setLevel(DEBUG)


def check_identity(base, Ldegree=None, delta_rule="definition-sd", max_seconds=None):
    """
    Test protocol for one configuration of the Q7 identity.

    The verdict must be the one expected for the delta rule (conf.expected_verdicts).
    With "definition-sd" both sides must agree in every degree and in Euler characteristic.
    If max_seconds is given, the run must not take longer.

    Returns the VerificationReport.
    """
    base = BaseSpec.parse(base)
    flags = VariantFlags(delta_rule)
    log.info("Testing: {} deg L = {} [{}]".format(base, Ldegree, flags.delta_rule))

    timer = Timer(text="{} done in {{:0.3f}}s".format(base), logger=log.debug)
    timer.start()
    report = verify(build_model(base, Ldegree), flags)
    seconds = timer.stop()

    expected = conf.expected_verdicts[flags.delta_rule]
    if report.verdict != expected:
        for d, lhs, rhs, equal in report.by_degree():
            log.error("degree {}: {} | {} | {}".format(d, lhs, rhs, equal))
    assert report.verdict == expected, "{}: {} instead of {}".format(base, report.verdict, expected)

    if report.passed:
        assert all(equal for _, _, _, equal in report.by_degree())
        assert report.lhs_chi == report.rhs_chi
    if max_seconds is not None:
        assert seconds < max_seconds, "{} took {:0.1f}s".format(base, seconds)
    return report


def check_matrix(delta_rule="definition-sd"):
    """
    Runs the configured numeric matrix and formal dimensions under the delta rule.
    """
    reports = []
    for base, Ldegree in conf.numeric_matrix:
        reports.append(check_identity(base, Ldegree, delta_rule, max_seconds=5))
    for dim in conf.formal_dims:
        reports.append(check_identity(BaseSpec("formal", dim), None, delta_rule, max_seconds=10))
    return reports
