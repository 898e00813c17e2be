"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import json
import sys
from dataclasses import replace

from codetiming import Timer

from verspec import conf
from verspec.cclass import euler_characteristic_of
from verspec.cli.config import RunConfig, parse_config
from verspec.cli.emit import emit, emit_summary
from verspec.q7 import BaseSpec, build_model, verify, as_json_value
from verspec.util import log
from verspec.util.exception import VerspecException, UsageError

"""
The verspec command line.

Exit codes:
    0: the identity holds (verify), every configuration reached its expected verdict (verify-all),
       the Euler characteristic matches its oracle (chi)
    1: the identity fails, or a configuration did not reach its expected verdict, or an oracle mismatch
    2: usage or configuration error
"""

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _write(text: str, config: RunConfig) -> None:
    if config.out:
        try:
            config.out.parent.mkdir(parents=True, exist_ok=True)
            config.out.write_text(text)
        except OSError as e:
            raise UsageError(f'Cannot write the report to "{config.out}": {e}')
        log.info(f"Report written to {config.out}")
    else:
        sys.stdout.write(text)


def run_verify(config: RunConfig) -> int:
    model = build_model(config.base, config.Ldegree)
    report = verify(model, config.variant)
    _write(emit(report, config.emit), config)
    return EXIT_PASS if report.passed else EXIT_FAIL


def acceptance_matrix() -> Iterator[Tuple[BaseSpec, Optional[int], str]]:
    """
    The configured numeric (base, deg L) pairs, then the formal bases, each under every delta rule.
    """
    for base, Ldegree in conf.numeric_matrix:
        for rule in conf.delta_rules:
            yield BaseSpec.parse(base), Ldegree, rule
    for dim in conf.formal_dims:
        for rule in conf.delta_rules:
            yield BaseSpec("formal", dim), None, rule


def run_verify_all(config: RunConfig) -> int:
    rows: List[Dict[str, Any]] = []
    for base, Ldegree, rule in acceptance_matrix():
        flags = replace(config.variant, delta_rule=rule)
        label = f"{base.text} deg L = {Ldegree} [{rule}]" if Ldegree else f"{base.text} [{rule}]"
        with Timer(text=f"{label}: {{:0.3f}}s", logger=log.debug):
            report = verify(build_model(base, Ldegree), flags)
        expected = conf.expected_verdicts.get(rule)
        rows.append(
            {
                "base": base.text,
                "L": Ldegree,
                "variant": rule,
                "lhs_chi": as_json_value(report.lhs_chi),
                "rhs_chi": as_json_value(report.rhs_chi),
                "verdict": report.verdict,
                "expected": expected,
                "ok": expected is None or report.verdict == expected,
            }
        )
    _write(emit_summary(rows, config.emit), config)
    return EXIT_PASS if all(row["ok"] for row in rows) else EXIT_FAIL


def run_chi(config: RunConfig) -> int:
    chi = as_json_value(euler_characteristic_of(config.space))
    expected = conf.oracle_expected.get(config.space)
    matches = expected is None or chi == expected

    if config.emit == "json":
        text = json.dumps({"space": config.space, "chi": chi, "expected": expected, "matches": matches}, indent=2) + "\n"
    elif config.emit == "csv":
        text = "space,chi,expected,matches\n{},{},{},{}\n".format(
            config.space, chi, "" if expected is None else expected, "true" if matches else "false"
        )
    else:
        text = f"chi({config.space}) = {chi}" + ("" if expected is None else f" (expected {expected})") + "\n"
    _write(text, config)
    return EXIT_PASS if matches else EXIT_FAIL


commands = {
    "verify": run_verify,
    "verify-all": run_verify_all,
    "chi": run_chi,
}


def run(config: RunConfig) -> int:
    """
    Runs the configured command and returns its exit code.

    Example:

        >>> run(parse_config(['verify', '--base', 'P1', '--emit', 'csv']))  # doctest: +ELLIPSIS
        degree,lhs,rhs,equal
        ...
        chi,12,12,true
        0
    """
    try:
        return commands[config.command](config)
    except UsageError as e:
        log.error(e)
        return EXIT_USAGE
    except VerspecException as e:
        log.error(e)
        return EXIT_USAGE


def _set_verbosity(verbosity: int) -> None:
    if verbosity >= 2:
        log.setLevel(log.DEBUG)
    elif verbosity == 1:
        log.setLevel(log.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the "verspec" command.
    """
    try:
        config = parse_config(argv)
    except UsageError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    _set_verbosity(config.verbosity)
    log.debug(f"Running {config}")
    return run(config)


if __name__ == "__main__":

    sys.exit(main())
