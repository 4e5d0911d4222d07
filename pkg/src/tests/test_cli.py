import unittest
import io
import json
import logging
import sys
import tempfile
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import numpy as np

from dirlag import globals
from dirlag import start_cli
from dirlag import cli
from dirlag.arg_parsing import parse_arguments
from dirlag.helpers import custom_logging_callback
from dirlag.cli.builtins import random_rational, two_power
from dirlag.cli.report import EXIT_SUCCESS, EXIT_CHECK_FAILURE, EXIT_INPUT_ERROR

log = logging.getLogger()
if sys.flags.debug:
    log.setLevel(logging.DEBUG)


class Specs(unittest.TestCase):
    def test_coefficients_are_canonical(self):
        spec = cli.parse_spec('{"N": 8, "mode": "exact", "coeffs": {"3": "-2/4", "2": "1"}}')
        self.assertEqual(list(spec.coeffs.items()), [("2", "1"), ("3", "-1/2")])
        f = spec.to_series()
        self.assertEqual(f[3], Fraction(-1, 2))
        self.assertEqual(f.support(), (2, 3))

    def test_builtin(self):
        spec = cli.parse_spec('{"N": 64, "builtin": "log_zeta"}')
        self.assertEqual(spec.mode, globals.EXACT)
        self.assertEqual(spec.to_series()[8], Fraction(1, 3))

    def test_command_line_defaults(self):
        spec = cli.parse_spec('{"builtin": "prime_zeta"}', default_order=12, default_mode=globals.NUMERIC)
        self.assertEqual((spec.order, spec.mode), (12, globals.NUMERIC))
        spec = cli.parse_spec('{"N": 4, "mode": "exact", "builtin": "prime_zeta"}', default_order=12,
                              default_mode=globals.NUMERIC)
        self.assertEqual((spec.order, spec.mode), (4, globals.EXACT))

    def test_numeric_coefficients(self):
        f = cli.parse_spec('{"N": 4, "mode": "numeric", "coeffs": {"2": 0.5, "4": "1+2j"}}').to_series()
        self.assertEqual(f[4], 1 + 2j)

    def test_zero_denominator(self):
        with self.assertRaises(cli.SpecValidationError):
            cli.parse_spec('{"N": 8, "coeffs": {"2": "1/0"}}')

    def test_invalid_documents(self):
        for text in (
            '{"N": 8, "coeffs": {"2": 0.5}}',
            '{"N": 8, "coeffs": {"9": "1"}}',
            '{"N": 0, "builtin": "log_zeta"}',
            '{"N": 8, "mode": "fast", "builtin": "log_zeta"}',
            '{"N": 8}',
            '{"N": 8, "coeffs": {}, "builtin": "log_zeta"}',
            '{"N": 8, "coeffs": {"2": "1"}, "seed": 3}',
            '{"N": 8, "builtin": "random_rational", "seed": "3"}',
            '{"N": 8, "builtin": "log_zeta", "colour": "red"}',
            '[1, 2]',
        ):
            with self.assertRaises(cli.SpecValidationError, msg=text):
                cli.parse_spec(text)

    def test_parse_error_position(self):
        with self.assertRaises(cli.SpecParseError) as context:
            cli.parse_specs('{"N": 8, "builtin": "log_zeta"}\n\n{"N": 8,, }')
        self.assertEqual(context.exception.line, 3)
        self.assertEqual(context.exception.column, 9)

    def test_unknown_builtin(self):
        with self.assertRaises(cli.UnknownBuiltin) as context:
            cli.parse_spec('{"N": 8, "builtin": "zeta"}')
        self.assertEqual(context.exception.name, "zeta")

    def test_require_d0(self):
        with self.assertRaises(cli.SpecValidationError):
            cli.parse_spec('{"N": 4, "coeffs": {"1": "1", "2": "1"}}', require_d0=True)
        self.assertFalse(cli.parse_spec('{"N": 4, "coeffs": {"1": "1"}}').to_series().in_d0())

    def test_serialized_specs_parse_back(self):
        specs = [cli.SeriesSpec(16, builtin=name) for name in sorted(cli.BUILTINS) if name != "random_rational"]
        specs.append(cli.SeriesSpec(16, globals.NUMERIC, builtin="random_rational", params={"density": 0.25}, seed=4))
        rng = np.random.default_rng(99)
        for _ in range(100):
            indices = rng.choice(np.arange(2, 17), size=4, replace=False)
            coeffs = {str(int(n)): "{:d}/{:d}".format(int(rng.integers(-9, 10)), int(rng.integers(1, 10)))
                      for n in indices}
            specs.append(cli.parse_spec(json.dumps({"N": 16, "coeffs": coeffs})))
        for spec in specs:
            parsed = cli.parse_spec(cli.serialize(spec))
            self.assertEqual(parsed, spec)
            self.assertEqual(parsed.to_series(), spec.to_series())

    def test_spec_seed_reaches_the_builtin(self):
        spec = cli.parse_spec('{"N": 32, "builtin": "random_rational", "seed": 5}')
        self.assertEqual(spec.to_series(), random_rational(32, seed=5))

    def test_random_rational_is_deterministic(self):
        self.assertEqual(random_rational(64, seed=1), random_rational(64, seed=1))
        self.assertNotEqual(random_rational(64, seed=1), random_rational(64, seed=2))
        self.assertTrue(random_rational(64, seed=1, positive=True).is_nonnegative())
        self.assertTrue(random_rational(64, seed=1, density=0.0).is_zero())

    def test_builtin_parameter_types(self):
        for params in ('{"positive": "false"}', '{"positive": 1}', '{"density": "0.5"}', '{"density": 2}'):
            with self.assertRaises(cli.SpecValidationError, msg=params):
                cli.parse_spec('{"N": 8, "builtin": "random_rational", "seed": 1, "params": ' + params + '}')
        spec = cli.parse_spec('{"N": 8, "builtin": "random_rational", "seed": 1, "params": {"positive": false}}')
        self.assertEqual(spec.to_series(), random_rational(8, seed=1))
        spec = cli.parse_spec('{"N": 8, "builtin": "random_rational", "params": {"density": 0.25}}')
        self.assertIsNone(spec.seed)

    def test_two_power(self):
        f = two_power(8)
        self.assertEqual(f.support(), (2,))
        self.assertEqual(f[2], 1)

    def test_spec_file(self):
        with tempfile.TemporaryDirectory() as directory:
            location = Path(directory) / "specs.jsonl"
            location.write_text('{"N": 8, "builtin": "log_zeta"}\n\n{"N": 8, "coeffs": {"2": "1"}}\n')
            specs = cli.load_spec_argument("@" + str(location))
            self.assertEqual(len(specs), 2)
            with self.assertRaises(cli.SpecValidationError):
                cli.load_spec_argument("@" + str(Path(directory) / "missing.jsonl"))
        with self.assertRaises(cli.SpecValidationError):
            cli.load_spec_argument("  \n")


class CommandLine(unittest.TestCase):
    def tearDown(self):
        globals.initialise({})

    def __run(self, *argv):
        output = io.StringIO()
        with self.assertRaises(SystemExit) as context:
            with redirect_stdout(output):
                start_cli(list(argv) + ["--logLevel", "ERROR"])
        text = output.getvalue()
        return (context.exception.code, json.loads(text) if text.startswith("{") else text)

    def test_solve_with_every_method(self):
        (code, report) = self.__run(
            "invert", "solve", "--spec", '{"N": 32, "builtin": "random_rational", "seed": 3}',
            "--method", "all", "--w", "1/2"
        )
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertTrue(report["passed"])
        self.assertEqual(
            [check["check"] for check in report["checks"]],
            ["residual", "agreement_closed_form", "agreement_fixed_point"]
        )
        self.assertEqual(sorted(report["results"]["solutions"]), ["closed_form", "fixed_point", "triangular"])

    def test_corrupted_family_fails(self):
        (code, report) = self.__run(
            "family", "verify", "--spec", '{"N": 16, "builtin": "log_zeta"}', "--corrupt", "6"
        )
        self.assertEqual(code, EXIT_CHECK_FAILURE)
        self.assertFalse(report["passed"])
        failures = [check for check in report["checks"] if not check["passed"]]
        self.assertTrue(failures)
        for failure in failures:
            self.assertEqual(failure["index"], 6)
            self.assertNotEqual(failure["lhs"], failure["rhs"])

    def test_bad_input(self):
        (code, _) = self.__run("invert", "solve", "--spec", '{"N": 8, "coeffs": {"2": "1/0"}}')
        self.assertEqual(code, EXIT_INPUT_ERROR)
        (code, _) = self.__run("invert", "solve", "--spec", '{"N": 8, "coeffs": {"2": "1"')
        self.assertEqual(code, EXIT_INPUT_ERROR)
        (code, _) = self.__run("invert", "bridge", "--spec", '{"N": 16, "coeffs": {"2": "1", "6": "1"}}')
        self.assertEqual(code, EXIT_INPUT_ERROR)
        (code, _) = self.__run("invert", "solve", "--spec", '{"N": 8, "coeffs": {"1": "1", "2": "1"}}')
        self.assertEqual(code, EXIT_INPUT_ERROR)

    def test_bridge(self):
        (code, report) = self.__run("invert", "bridge", "--spec", '{"N": 32, "coeffs": {"2": "1"}}')
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(len(report["checks"]), 3)

    def test_one_run_per_spec(self):
        (code, report) = self.__run(
            "series", "exp", "--spec", '{"N": 16, "builtin": "log_zeta"}\n{"N": 16, "builtin": "prime_zeta"}'
        )
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(len(report["results"]["runs"]), 2)
        self.assertEqual([check["details"]["spec"] for check in report["checks"]], [0, 1])
        self.assertEqual(report["results"]["runs"][0]["series"]["coeffs"]["6"], "1")

    def test_seed_flag(self):
        (_, report) = self.__run(
            "series", "deriv", "--spec", '{"N": 8, "builtin": "random_rational"}', "--seed", "11"
        )
        self.assertEqual(report["results"]["spec"]["seed"], 11)

    def test_multiplicative(self):
        (code, report) = self.__run("family", "multiplicative", "--spec", '{"N": 16, "coeffs": {"6": "1"}}')
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertFalse(report["results"]["multiplicative"])
        self.assertEqual(report["results"]["first_failure"], [2, 3])

    def test_reports_are_deterministic(self):
        argv = ["invert", "expcheck", "--spec", '{"N": 24, "builtin": "random_rational", "seed": 8}', "--w", "w"]
        reports = []
        for _ in range(2):
            args = parse_arguments(argv)
            reports.append(cli.run(args, argv).to_json(include_timing=False))
        self.assertEqual(reports[0], reports[1])
        self.assertNotIn("timing", json.loads(reports[0]))

    def test_abscissa(self):
        (code, report) = self.__run("abscissa", "solve", "--descriptor", "zeta_shift:2", "--w", "1")
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(report["results"]["abscissa"]["case"], "interior_min")
        self.assertEqual([check["check"] for check in report["checks"]], ["interior_condition", "dual_route"])

    def test_abscissa_needs_positive_w(self):
        (code, _) = self.__run("abscissa", "solve", "--descriptor", "zeta_shift:2", "--w", "-1")
        self.assertEqual(code, EXIT_INPUT_ERROR)

    def test_curve_csv(self):
        with tempfile.TemporaryDirectory() as directory:
            location = Path(directory) / "curve.csv"
            (code, _) = self.__run(
                "abscissa", "curve", "--descriptor", "zeta_shift:2", "--w", "1",
                "--grid=-0.5:1:4", "--format", "csv", "--out", str(location)
            )
            self.assertEqual(code, EXIT_SUCCESS)
            lines = location.read_text().splitlines()
        self.assertEqual(lines[0], "s,F,f,fprime,err")
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[1].split(",")[0], "-0.5")

    def test_runs_do_not_share_overrides(self):
        defaults = dict(globals.default_configs)
        (code, _) = self.__run(
            "series", "exp", "--spec", '{"builtin": "log_zeta"}', "--order", "8",
            "--tolerance", "1e-3", "--max-cutoff", "1000"
        )
        self.assertEqual(code, EXIT_SUCCESS)
        self.assertEqual(globals.active_configs["max_cutoff"], 1000)
        self.assertEqual(globals.MAX_CUTOFF, 1000)
        self.assertEqual(globals.default_configs, defaults)

        args = parse_arguments(["series", "exp", "--spec", '{"builtin": "log_zeta"}'])
        self.assertEqual((args.order, args.tolerance, args.max_cutoff),
                         (defaults["order"], defaults["tolerance"], defaults["max_cutoff"]))
        globals.initialise(vars(args))
        self.assertEqual(globals.NUMERIC_TOLERANCE, defaults["tolerance"])

    def test_argument_errors(self):
        with redirect_stdout(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                parse_arguments(["family", "verify", "--corrupt", "1"])
        self.assertEqual(context.exception.code, EXIT_INPUT_ERROR)

    def test_extended_trace(self):
        def failing(series):
            order = series.order
            raise ValueError("order {:d} rejected".format(order))

        trace_log = logging.getLogger("dirlag.trace")
        with self.assertLogs(trace_log, level="ERROR") as logs:
            try:
                failing(two_power(8))
            except ValueError:
                custom_logging_callback(trace_log, logging.ERROR, *sys.exc_info())
        (message,) = logs.output
        self.assertIn("ValueError: order 8 rejected", message)
        self.assertIn("in failing", message)
        self.assertIn("series = <DirichletSeries", message)
