"""
    Machine readable outcome of one command.

    A report echoes the command, lists every check with its first counterexample and carries
    the computed results. Everything but the timing field is a function of the inputs, so
    two runs with the same flags give byte identical reports once timing is left out.
"""

import csv
import json

from dirlag.checks import CheckResult, all_passed, serialize_scalar
from dirlag.polyalg import scalars

EXIT_SUCCESS = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2

CHECK_COLUMNS = ("check", "passed", "index", "lhs", "rhs")


def series_to_dict(series):
    """
        Nonzero coefficients of a series keyed by index.
    """
    return {
        "N": series.order,
        "mode": series.mode,
        "coeffs": {str(n): serialize_scalar(c) for (n, c) in series.items() if not scalars.is_zero(c)},
    }


def family_to_dict(fam):
    return {
        "N": fam.order,
        "mode": fam.mode,
        "polys": {str(n): text for (n, text) in fam.serialize()},
    }


class Report(object):
    __slots__ = ("command", "checks", "results", "timing")

    def __init__(self, command, checks=None, results=None, timing=None):
        assert isinstance(command, (list, tuple)), "command expected to be a list. Got {:s}".format(repr(command))
        checks = list(checks or [])
        assert all(isinstance(check, CheckResult) for check in checks), "checks expected to be CheckResult"
        self.command = [str(token) for token in command]
        self.checks = checks
        self.results = dict(results or {})
        self.timing = timing

    @property
    def passed(self):
        return all_passed(self.checks)

    @property
    def exit_code(self):
        return EXIT_SUCCESS if self.passed else EXIT_CHECK_FAILURE

    def __repr__(self):
        return "<Report {:s}: {:d} checks, {:s}>".format(
            " ".join(self.command), len(self.checks), "pass" if self.passed else "FAIL"
        )

    def to_dict(self, include_timing=True):
        result = {
            "command": self.command,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "results": self.results,
        }
        if include_timing and self.timing is not None:
            result["timing"] = {"seconds": self.timing}
        return result

    def to_json(self, include_timing=True):
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def write_checks_csv(self, stream):
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CHECK_COLUMNS)
        for check in self.checks:
            writer.writerow(
                (check.name, "true" if check.passed else "false",
                 "" if check.index is None else check.index, check.lhs or "", check.rhs or "")
            )
