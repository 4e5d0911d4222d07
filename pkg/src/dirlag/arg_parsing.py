import pathlib
import argparse
from fractions import Fraction

from dirlag import globals
from dirlag.abscissa.descriptors import BUILTIN_DESCRIPTORS
from dirlag.families.generation import POWER_SUMS, EXPONENTIAL
from dirlag.families.transforms import KINDS
from dirlag.inversion.result import METHODS, TRIANGULAR

SUBCOMMANDS = {
    "family": ("gen", "verify", "beta", "transform", "multiplicative"),
    "series": ("mul", "exp", "log", "pow", "deriv"),
    "invert": ("solve", "residual", "expcheck", "inversecheck", "general", "bridge"),
    "abscissa": ("solve", "minimize", "curve"),
}


def validate_path(location):
    loc = pathlib.Path(location)
    loc_parent = loc.parent
    if not loc_parent.exists():
        raise argparse.ArgumentTypeError("Location {:s} does not exist.".format(str(loc_parent)))
    return loc


def validate_order(order):
    try:
        n = int(order)
        if n >= 1:
            return n
        else:
            raise argparse.ArgumentTypeError("Invalid order: {:s}".format(order))
    except Exception:
        raise argparse.ArgumentTypeError("Invalid order: {:s}".format(order))


def __validate_scalar(token, symbol):
    if token == symbol:
        return token
    try:
        Fraction(token)
        return token
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("Invalid value for {:s}: {:s}".format(symbol, token))


def validate_w(token):
    return __validate_scalar(token, "w")


def validate_t(token):
    return __validate_scalar(token, "x")


def validate_descriptor(text):
    """
        name:param[:param...], e.g. zeta_shift:2 or log_weighted:2:3
    """
    (name, *parameters) = text.split(":")
    if name not in BUILTIN_DESCRIPTORS:
        raise argparse.ArgumentTypeError(
            "Unknown descriptor {:s}. Expected one of {:s}".format(name, ", ".join(sorted(BUILTIN_DESCRIPTORS)))
        )
    try:
        values = tuple(float(Fraction(parameter)) for parameter in parameters)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("Invalid descriptor parameters: {:s}".format(text))
    if len(values) != (1 if name == "zeta_shift" else 2):
        raise argparse.ArgumentTypeError("Wrong number of parameters for {:s}: {:s}".format(name, text))
    return (name, values)


def validate_grid(text):
    """
        start:stop:count, count evenly spaced points including both ends.
    """
    try:
        (start, stop, count) = text.split(":")
        (start, stop, count) = (float(start), float(stop), int(count))
    except ValueError:
        raise argparse.ArgumentTypeError("Invalid grid: {:s}. Expected start:stop:count".format(text))
    if count < 0:
        raise argparse.ArgumentTypeError("Invalid grid: {:s}. Negative count".format(text))
    if count == 1:
        return [start]
    return [start + (stop - start) * k / (count - 1) for k in range(count)]


def validate_corrupt(index):
    try:
        n = int(index)
        if n >= 2:
            return n
        else:
            raise argparse.ArgumentTypeError("Invalid index to corrupt: {:s}".format(index))
    except Exception:
        raise argparse.ArgumentTypeError("Invalid index to corrupt: {:s}".format(index))


def __common_arguments():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "-l", "--logLevel",
        help="Logging Level (default: %(default)s)",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=globals.default_configs["logLevel"],
        type=str
    )
    parser.add_argument(
        "-N", "--order",
        help="Truncation order, used when a spec omits N (default: %(default)s)",
        default=globals.default_configs["order"],
        type=validate_order
    )
    parser.add_argument(
        "-m", "--mode",
        help="Scalar mode, used when a spec omits it (default: %(default)s)",
        choices=globals.MODES,
        default=globals.default_configs["mode"],
        type=str
    )
    parser.add_argument(
        "-w", "--w",
        help="Weight w: a rational, a float or the indeterminate w in exact mode (default: %(default)s)",
        default=globals.default_configs["w"],
        type=validate_w
    )
    parser.add_argument(
        "--seed",
        help="Seed for random_rational specs that carry none (default: %(default)s)",
        default=globals.default_configs["seed"],
        type=int
    )
    parser.add_argument(
        "-s", "--spec",
        help="Series spec: inline JSON or @path with one spec per line",
        default=None,
        type=str
    )
    parser.add_argument(
        "--spec2",
        help="Second series spec for mul, product, twist and residual",
        default=None,
        type=str
    )
    parser.add_argument(
        "-o", "--out",
        help="Output file (default: stdout)",
        default=None,
        type=validate_path
    )
    parser.add_argument(
        "-f", "--format",
        help="Report format (default: %(default)s)",
        choices=["json", "csv"],
        default="json",
        type=str
    )
    parser.add_argument(
        "--tolerance",
        help="Relative tolerance of numeric comparisons (default: %(default)s)",
        default=globals.default_configs["tolerance"],
        type=float
    )
    parser.add_argument(
        "--max-cutoff",
        dest="max_cutoff",
        help="Largest partial sum cutoff of the abscissa evaluators (default: %(default)s)",
        default=globals.default_configs["max_cutoff"],
        type=validate_order
    )
    parser.add_argument(
        "--method",
        help="Inversion solver (default: %(default)s)",
        choices=METHODS + ("all",),
        default=TRIANGULAR,
        type=str
    )
    parser.add_argument(
        "--expansion",
        help="How a family is expanded from its generating series (default: %(default)s)",
        choices=(POWER_SUMS, EXPONENTIAL),
        default=POWER_SUMS,
        type=str
    )
    parser.add_argument(
        "--kind",
        help="Family transform (default: %(default)s)",
        choices=KINDS,
        default=KINDS[0],
        type=str
    )
    parser.add_argument(
        "--corrupt",
        help="Index n whose alpha_n receives an extra x^2 before verification",
        default=None,
        type=validate_corrupt
    )
    parser.add_argument(
        "-t", "--t",
        help="Exponent of series pow: a rational, a float or the indeterminate x (default: %(default)s)",
        default="x",
        type=validate_t
    )
    parser.add_argument(
        "-x", "--x",
        help="Value of x for expcheck (default: indeterminate in exact mode)",
        default=None,
        type=validate_t
    )
    parser.add_argument(
        "-d", "--descriptor",
        help="Abscissa descriptor, e.g. zeta_shift:2 or log_weighted:2:3",
        default=None,
        type=validate_descriptor
    )
    parser.add_argument(
        "-g", "--grid",
        help="Curve grid start:stop:count",
        default=None,
        type=validate_grid
    )
    return parser


def parse_arguments(argv=None):
    common = __common_arguments()
    parser = argparse.ArgumentParser(prog="dirlag")
    groups = parser.add_subparsers(dest="group", metavar="group")
    groups.required = True
    for (group, actions) in SUBCOMMANDS.items():
        group_parser = groups.add_parser(group)
        subparsers = group_parser.add_subparsers(dest="action", metavar="action")
        subparsers.required = True
        for action in actions:
            subparsers.add_parser(action, parents=[common])

    return parser.parse_args(argv)
