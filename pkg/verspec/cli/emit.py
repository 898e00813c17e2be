"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, List, Sequence

import csv
import io
import json

from verspec.q7.report import VerificationReport, as_json_value
from verspec.util.exception import VerspecException

"""
Report emission: json, csv, or a human readable table.

All output is deterministic: fixed key order, no timestamps.
"""


def _flag(value: bool) -> str:
    return "true" if value else "false"


def emit_json(report: VerificationReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def emit_csv(report: VerificationReport) -> str:
    """
    One row per degree, then the Euler characteristic row.

    Example:

        >>> from verspec.q7 import build_model, verify
        >>> print(emit_csv(verify(build_model('formal:1'))), end='')
        degree,lhs,rhs,equal
        0,0,0,true
        1,12L,12L,true
        chi,12L,12L,true
    """
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["degree", "lhs", "rhs", "equal"])
    for d, lhs, rhs, equal in report.by_degree():
        writer.writerow([d, str(lhs), str(rhs), _flag(equal)])
    lhs_chi, rhs_chi = as_json_value(report.lhs_chi), as_json_value(report.rhs_chi)
    writer.writerow(["chi", lhs_chi, rhs_chi, _flag(report.lhs_chi == report.rhs_chi)])
    return stream.getvalue()


def _columns(rows: Sequence[Sequence[Any]]) -> List[str]:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]


def emit_table(report: VerificationReport) -> str:
    data = report.to_dict()
    base = data["config"]["base"]
    lines = [
        "Q7 over {}{}".format(
            f"formal:{base['dim']}" if base["kind"] == "formal" else f"P{base['n']}",
            "" if data["config"]["L"]["degree"] is None else f", deg L = {data['config']['L']['degree']}",
        ),
        "variant: {}, fiber tables: {}".format(report.variant["delta_rule"], report.variant["fiber_tables"]),
        "",
    ]

    rows = [("degree", "lhs", "rhs", "equal")]
    rows += [(d, lhs, rhs, _flag(equal)) for d, lhs, rhs, equal in report.by_degree()]
    rows.append(("chi", as_json_value(report.lhs_chi), as_json_value(report.rhs_chi), _flag(report.lhs_chi == report.rhs_chi)))
    lines += _columns(rows)

    lines += ["", "strata:"]
    lines += ["  " + line for line in _columns([(name, chi) for name, chi in data["strata"].items()])]
    lines += ["", "pushed forward constructible function: " + report.rhs_cf.text(list(report.strata))]

    if report.orientifold is not None:
        orientifold = report.orientifold
        lines += ["", f"orientifold {orientifold['orientifold']}: chi = {orientifold['chi_orientifold']}"]
        for name, brane in orientifold["branes"].items():
            lines.append(f"  {name}: m = {brane['multiplicity']}, chi = {brane['chi']}, chi_o = {brane['chi_o']}")
        lines.append(f"  2 chi(O) + sum chi_o = {orientifold['total']} (rhs chi {orientifold['rhs_chi']})")

    if report.double_cover is not None:
        cover = report.double_cover
        lines += ["", f"double cover (informational): 2 chi(Y) = {cover['lhs']}, transverse pullbacks give {cover['rhs']}"]

    if report.notes:
        lines += ["", "notes:"] + [f"  - {note}" for note in report.notes]

    lines += ["", f"verdict: {report.verdict}"]
    return "\n".join(lines) + "\n"


def emit(report: VerificationReport, fmt: str = "table") -> str:
    """
    The report as text, in the given format ("table", "json" or "csv").
    """
    if fmt == "json":
        return emit_json(report)
    if fmt == "csv":
        return emit_csv(report)
    if fmt == "table":
        return emit_table(report)
    raise VerspecException(f'Unknown emit format "{fmt}"')


def emit_summary(rows: Sequence[Dict[str, Any]], fmt: str = "table") -> str:
    """
    The verify-all summary, one row per configuration, in run order.

    Rows hold base, L, variant, lhs_chi, rhs_chi, verdict, expected and ok. Timings are logged, not emitted.
    """
    keys = ["base", "L", "variant", "lhs_chi", "rhs_chi", "verdict", "expected", "ok"]
    if fmt == "json":
        return json.dumps([{key: row[key] for key in keys} for row in rows], indent=2) + "\n"
    if fmt == "csv":
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(keys)
        for row in rows:
            writer.writerow(["" if row[key] is None else _flag(row[key]) if isinstance(row[key], bool) else row[key] for key in keys])
        return stream.getvalue()
    if fmt == "table":
        table = [tuple(keys)]
        table += [tuple("-" if row[key] is None else _flag(row[key]) if isinstance(row[key], bool) else row[key] for key in keys) for row in rows]
        failed = sum(1 for row in rows if not row["ok"])
        return "\n".join(_columns(table) + ["", f"{len(rows) - failed}/{len(rows)} configurations as expected"]) + "\n"
    raise VerspecException(f'Unknown emit format "{fmt}"')
