from verspec.cli.config import RunConfig, build_parser, parse_config
from verspec.cli.emit import emit, emit_summary
from verspec.cli.commands import run, main
