__all__ = [
    "SeriesSpec",
    "parse_spec",
    "parse_specs",
    "load_spec_argument",
    "serialize",
    "builtin",
    "BUILTINS",
    "Report",
    "run",
    "emit",
    "COMMANDS",
    "CliError",
    "SpecParseError",
    "SpecValidationError",
    "UnknownBuiltin",
]

from dirlag.cli.spec import SeriesSpec
from dirlag.cli.spec import parse_spec
from dirlag.cli.spec import parse_specs
from dirlag.cli.spec import load_spec_argument
from dirlag.cli.spec import serialize
from dirlag.cli.builtins import builtin
from dirlag.cli.builtins import BUILTINS
from dirlag.cli.report import Report
from dirlag.cli.commands import run
from dirlag.cli.commands import emit
from dirlag.cli.commands import COMMANDS

from dirlag.cli.exceptions import \
    CliError, \
    SpecParseError, \
    SpecValidationError, \
    UnknownBuiltin
