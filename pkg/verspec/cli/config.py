"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, Mapping, Optional, Sequence, Union

import argparse
from dataclasses import dataclass
from pathlib import Path

from typing_extensions import Literal

from verspec import conf
from verspec.conf.configio import ConfigIO
from verspec.q7.model import resolve_L_degree
from verspec.q7.variants import BaseSpec, VariantFlags, parse_fiber_tables
from verspec.util.exception import VerspecException, UsageError

"""
Run configuration: command line flags, an optional json configuration file, and the configured defaults.

Precedence: flags > --config file > user conf > global defaults.
"""

Command = Literal["verify", "verify-all", "chi"]
EmitFormat = Literal["table", "json", "csv"]


@dataclass(frozen=True)
class RunConfig:
    """
    A validated run configuration.

    Args:
        command: "verify", "verify-all" or "chi"
        base: the BaseSpec (n, d <= max_base_dim)
        Ldegree: degree of L on P^n, None on formal bases
        variant: the VariantFlags
        emit: "table", "json" or "csv"
        out: optional output path, stdout if None
        space: oracle space name, for the "chi" command
        verbosity: number of -v flags
    """

    command: Command
    base: BaseSpec
    Ldegree: Optional[int]
    variant: VariantFlags
    emit: EmitFormat = "table"
    out: Optional[Path] = None
    space: Optional[str] = None
    verbosity: int = 0


class ArgumentParser(argparse.ArgumentParser):
    """
    An argparse parser that raises a UsageError instead of exiting.
    """

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:

    common = ArgumentParser(add_help=False)
    common.add_argument("--base", help=f'Base: P0..P{conf.max_base_dim} or formal:d (default from conf: "{conf.default_base}")')
    common.add_argument("--L", dest="L", help='Degree of L on P^n, a positive integer or "anticanonical"')
    common.add_argument("--variant", help="Delta rule: sd | printed (or definition-sd | paper-printed)")
    common.add_argument("--fiber-tables", dest="fiber_tables", help="Json file of fibration tables replacing the configured ones")
    common.add_argument("--emit", choices=conf.emit_formats, help="Report format")
    common.add_argument("--out", help="Write the report to this file instead of stdout")
    common.add_argument("--config", help="Json run configuration file")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0, help="-v: info, -vv: debug")

    parser = ArgumentParser(
        prog="verspec",
        description="Checks the relative Verdier specialization identity for the Q7 weak coupling limit.",
    )
    parser.add_argument("--version", action="version", version=conf.application_name)
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    commands.add_parser("verify", parents=[common], help="Verify the identity over one base")
    commands.add_parser("verify-all", parents=[common], help="Verify the full acceptance matrix")
    chi = commands.add_parser("chi", parents=[common], help="Euler characteristic of a named oracle space")
    chi.add_argument("--space", help=f"One of {sorted(conf.oracle_spaces)}")
    return parser


def _read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    return ConfigIO(path, strict=True).read()


def _table_overrides(value: Any) -> Dict[str, Any]:
    """
    Table overrides come as a path to a json file, or inline (from a configuration file).
    """
    if isinstance(value, Mapping):
        data = value
    else:
        data = _read_config_file(value)
    return parse_fiber_tables(data)


def parse_config(args: Optional[Sequence[str]] = None, file: Optional[Union[str, Path]] = None) -> RunConfig:
    """
    Parses the command line arguments into a RunConfig.

    A configuration file can be given as "file" or with --config; the flags override it.
    Any problem raises a UsageError.

    Examples:

        >>> config = parse_config(['verify', '--base', 'P1', '--L', '1', '--emit', 'json'])
        >>> config.base.text, config.Ldegree, config.variant.delta_rule, config.emit
        ('P1', 1, 'definition-sd', 'json')
        >>> parse_config(['verify', '--base', 'formal:3']).Ldegree is None
        True
        >>> parse_config(['verify', '--base', 'P9'])  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        verspec.util.exception.UsageError: [UsageError] Unsupported base "P9": dimension 9 is above 4
    """
    namespace = build_parser().parse_args(args)

    file = namespace.config or file
    from_file = _read_config_file(file) if file else {}

    def pick(flag, key, default):
        if flag is not None:
            return flag
        if key in from_file:
            return from_file[key]
        return default

    try:
        base = BaseSpec.parse(pick(namespace.base, "base", conf.default_base))
        L = pick(namespace.L, "L", conf.default_L)
        if isinstance(L, Mapping):
            L = L.get("degree")
        Ldegree = resolve_L_degree(base, L)

        variant = pick(namespace.variant, "variant", conf.default_variant)
        if isinstance(variant, Mapping):
            variant = variant.get("delta_rule", conf.default_variant)
        overrides = pick(namespace.fiber_tables, "fiber_tables", None)
        flags = VariantFlags(variant, table_overrides=_table_overrides(overrides) if overrides else ())

        emit = pick(namespace.emit, "emit", conf.default_emit)
        if emit not in conf.emit_formats:
            raise UsageError(f'Unknown emit format "{emit}", expected one of {conf.emit_formats}')
        out = pick(namespace.out, "out", None)

        space = getattr(namespace, "space", None) or from_file.get("space")
        if namespace.command == "chi":
            if not space:
                raise UsageError("The chi command needs --space")
            if space not in conf.oracle_spaces:
                raise UsageError(f'Unknown space "{space}", expected one of {sorted(conf.oracle_spaces)}')

    except UsageError:
        raise
    except VerspecException as e:
        raise UsageError(e.message)

    return RunConfig(
        command=namespace.command,
        base=base,
        Ldegree=Ldegree,
        variant=flags,
        emit=emit,
        out=Path(out) if out else None,
        space=space,
        verbosity=namespace.verbosity,
    )
