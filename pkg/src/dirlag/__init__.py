__all__ = ['start_cli']

import sys
import logging
from dirlag.helpers import custom_logging_callback, logger_module_name

__log_format = '[{asctime:^s}][{levelname:^8s}]: {message:s}'
__log_format_debug = '[{asctime:^s}][{levelname:^8s}][{name:s}|{funcName:s}|{lineno:d}]: {message:s}'
__log_datefmt = '%Y/%m/%d|%H:%M:%S (%Z)'
__log = None


def start_cli(argv=None):
    """
        Console entry point. Exits 0 when every check passes, 1 on a failed check and 2 on
        bad input or any error.
    """
    global __log
    from dirlag import globals
    from dirlag.arg_parsing import parse_arguments
    from dirlag.cli import run, emit
    from dirlag.cli.report import EXIT_INPUT_ERROR
    from dirlag.cli.exceptions import CliError
    from dirlag.polyalg.exceptions import PolyAlgError
    from dirlag.dseries.exceptions import SeriesError
    from dirlag.families.exceptions import FamilyError
    from dirlag.inversion.exceptions import InversionError
    from dirlag.abscissa.exceptions import AbscissaError

    INPUT_ERRORS = (CliError, PolyAlgError, SeriesError, FamilyError, InversionError, AbscissaError, AssertionError)

    parsed_args = parse_arguments(argv)
    try:
        if sys.flags.debug or parsed_args.logLevel == 'DEBUG':
            logging.basicConfig(format=__log_format_debug, datefmt=__log_datefmt, style='{', level=logging.DEBUG)
        else:
            logging.basicConfig(format=__log_format, datefmt=__log_datefmt, style='{', level=parsed_args.logLevel)
        __log = logging.getLogger(logger_module_name(__file__))

        __log.debug('Parsed Arguments: {:s}'.format(str(parsed_args)))
        globals.initialise(vars(parsed_args))

        report = run(parsed_args, sys.argv[1:] if argv is None else argv)
        emit(report, parsed_args)
        code = report.exit_code
    except INPUT_ERRORS as ex:
        (__log or logging.getLogger()).error(str(ex))
        code = EXIT_INPUT_ERROR
    except Exception:
        custom_logging_callback(__log or logging.getLogger(), logging.ERROR, *sys.exc_info())
        code = EXIT_INPUT_ERROR
    sys.exit(code)
