"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, Mapping, Tuple, Union

import re
from dataclasses import dataclass

from typing_extensions import Literal

from verspec import conf
from verspec.chow import Space, projective_space, formal_base
from verspec.cfun import FibrationTable
from verspec.cfun.calculus import DeltaRule
from verspec.util.exception import VerspecException

"""
Run inputs: the base, and the variant flags.
"""

_projective_pattern = re.compile(r"^[Pp](\d+)$")
_formal_pattern = re.compile(r"^formal:(\d+)$")


@dataclass(frozen=True)
class BaseSpec:
    """
    A base: P^n (0 <= n <= max_base_dim) or a formal base of dimension d (1 <= d <= max_base_dim).

    Examples:

        >>> BaseSpec.parse('P3').to_dict()
        {'kind': 'Pn', 'n': 3}
        >>> BaseSpec.parse({'kind': 'formal', 'dim': 2}).text
        'formal:2'
        >>> BaseSpec.parse('P9')  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        verspec.util.exception.VerspecException: [VerspecException] Unsupported base "P9": dimension 9 is above 4
    """

    kind: Literal["projective", "formal"]
    dim: int

    def __post_init__(self):
        if self.kind not in ("projective", "formal"):
            raise VerspecException(f'Unsupported base kind "{self.kind}"')
        if isinstance(self.dim, bool) or not isinstance(self.dim, int):
            raise VerspecException(f'Unsupported base "{self.kind}": dimension {self.dim!r} is not an integer')
        if self.dim > conf.max_base_dim:
            raise VerspecException(f'Unsupported base "{self.text}": dimension {self.dim} is above {conf.max_base_dim}')
        minimum = 1 if self.kind == "formal" else 0
        if self.dim < minimum:
            raise VerspecException(f'Unsupported base "{self.text}": dimension {self.dim} is below {minimum}')

    @classmethod
    def parse(cls, value: Union[str, Mapping[str, Any], BaseSpec]) -> BaseSpec:
        """
        Reads "P3", "formal:3", {"kind": "Pn", "n": 3} or {"kind": "formal", "dim": 3}.
        """
        if isinstance(value, BaseSpec):
            return value
        if isinstance(value, str):
            text = value.strip()
            match = _projective_pattern.match(text)
            if match:
                return cls("projective", int(match.group(1)))
            match = _formal_pattern.match(text)
            if match:
                return cls("formal", int(match.group(1)))
            raise VerspecException(f'Unsupported base "{value}", expected P1..P{conf.max_base_dim} or formal:d')
        if isinstance(value, Mapping):
            kind = value.get("kind")
            if kind in ("Pn", "projective"):
                return cls("projective", value.get("n"))
            if kind == "formal":
                return cls("formal", value.get("dim"))
            raise VerspecException(f"Unsupported base {dict(value)}")
        raise VerspecException(f"Unsupported base {value!r}")

    @property
    def is_formal(self) -> bool:
        return self.kind == "formal"

    @property
    def text(self) -> str:
        return f"formal:{self.dim}" if self.is_formal else f"P{self.dim}"

    def space(self) -> Space:
        return formal_base(self.dim) if self.is_formal else projective_space(self.dim)

    def to_dict(self) -> Dict[str, Any]:
        if self.is_formal:
            return {"kind": "formal", "dim": self.dim}
        return {"kind": "Pn", "n": self.dim}

    def __str__(self):
        return self.text


def resolve_delta_rule(value: str) -> DeltaRule:
    """
    Accepts the delta rule names and their aliases ("sd", "printed").

    Example:

        >>> resolve_delta_rule('printed')
        'paper-printed'
    """
    value = conf.variant_aliases.get(value, value)
    if value not in conf.delta_rules:
        raise VerspecException(f'Unknown variant "{value}", expected one of {conf.delta_rules} or {sorted(conf.variant_aliases)}')
    return value


def parse_fiber_tables(data: Mapping[str, Any]) -> Dict[str, FibrationTable]:
    """
    Fibration tables from plain data: {"calD1": [["B", 2], ["D1", 4], ["S1", 3]], ...}
    """
    if not isinstance(data, Mapping):
        raise VerspecException(f"Fiber tables must be a mapping of table name to chain, got {type(data).__name__}")
    tables = {}
    for name, chain in data.items():
        try:
            tables[name] = FibrationTable(tuple((str(stratum), chi) for stratum, chi in chain))
        except (TypeError, ValueError) as e:
            raise VerspecException(f"Malformed fiber table {name!r}: {chain!r} ({e})")
    return tables


@dataclass(frozen=True)
class VariantFlags:
    """
    Variant flags of a verification run.

    Args:
        delta_rule: "definition-sd" (the default) or "paper-printed"
        fiber_tables: "paper" (the configured tables, the default), or "override" when table_overrides replace some
        table_overrides: (name, FibrationTable) pairs

    Example:

        >>> VariantFlags('sd').to_dict()
        {'delta_rule': 'definition-sd', 'fiber_tables': 'paper'}
    """

    delta_rule: DeltaRule = "definition-sd"
    fiber_tables: Literal["paper", "override"] = "paper"
    table_overrides: Tuple[Tuple[str, FibrationTable], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "delta_rule", resolve_delta_rule(self.delta_rule))
        overrides = self.table_overrides
        if isinstance(overrides, Mapping):
            overrides = tuple(overrides.items())
        overrides = tuple(sorted(overrides, key=lambda item: item[0]))
        object.__setattr__(self, "table_overrides", overrides)
        if self.fiber_tables not in ("paper", "override"):
            raise VerspecException(f'Unknown fiber tables "{self.fiber_tables}", expected "paper" or "override"')
        if overrides and self.fiber_tables == "paper":
            object.__setattr__(self, "fiber_tables", "override")

    def tables(self, configured: Mapping[str, FibrationTable]) -> Dict[str, FibrationTable]:
        """
        The configured tables, with the overrides applied.
        """
        tables = dict(configured)
        if self.fiber_tables == "override":
            for name, table in self.table_overrides:
                if name not in tables:
                    raise VerspecException(f"Unknown fiber table {name!r}, expected one of {sorted(tables)}")
                tables[name] = table
        return tables

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"delta_rule": self.delta_rule, "fiber_tables": self.fiber_tables}
        if self.table_overrides:
            data["overrides"] = {name: table.to_list() for name, table in self.table_overrides}
        return data
