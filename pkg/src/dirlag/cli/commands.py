"""
    Subcommands. Each one maps onto a library operation and returns a Report.

        family   gen | verify | beta | transform | multiplicative
        series   mul | exp | log | pow | deriv
        invert   solve | residual | expcheck | inversecheck | general | bridge
        abscissa solve | minimize | curve
"""

import logging
import sys
import time
from fractions import Fraction

from dirlag import globals
from dirlag.checks import CheckResult
from dirlag.helpers import logger_module_name
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly
from dirlag.dseries.operations import dmul, dexp, dlog, dpow, dderiv
from dirlag.families.generation import family_from_generator
from dirlag.families.transforms import transform, beta_transform, SCALE, PRODUCT, TWIST, BETA
from dirlag.families.verification import verify_family, first_multiplicativity_failure
from dirlag.inversion.result import METHODS, TRIANGULAR
from dirlag.inversion.solvers import solve
from dirlag.inversion.identities import exp_identity, inverse_check, residual_check
from dirlag.inversion.general import solve_general, compose_general
from dirlag.inversion.classical import bridge
from dirlag.abscissa.descriptors import descriptor
from dirlag.abscissa.minimum import sigma_g, minimize_F, curve_dump, write_curve, CURVE_HEADER, INTERIOR_MIN
from dirlag.cli.spec import load_spec_argument, serialize
from dirlag.cli.report import Report, series_to_dict, family_to_dict
from dirlag.cli.exceptions import SpecValidationError

_log = logging.getLogger(logger_module_name(__file__))

ALL_METHODS = "all"

# Interior root condition and dual route agreement of the abscissa commands
INTERIOR_CONDITION_TOLERANCE = 1e-10
DUAL_ROUTE_TOLERANCE = 1e-8


def _scalar_argument(token, mode, symbol):
    """
        Converts a --w / --t / --x token. Exact mode keeps rationals exact and maps the bare
        symbol name onto an indeterminate.
    """
    if token == symbol:
        if mode == globals.NUMERIC:
            raise SpecValidationError("numeric mode needs a numeric value for {:s}".format(symbol))
        return SymbolicScalar.symbol(symbol)
    value = Fraction(token)
    return value if mode == globals.EXACT else float(value)


def _w(args, mode):
    return _scalar_argument(args.w, mode, "w")


def _positive_w(args):
    try:
        value = float(Fraction(args.w))
    except ValueError:
        raise SpecValidationError("abscissa commands need a numeric w. Got {:s}".format(args.w))
    if value <= 0:
        raise SpecValidationError("abscissa commands need w > 0. Got {:s}".format(args.w))
    return value


def _second_series(args, f, require_d0=False):
    if args.spec2 is None:
        raise SpecValidationError("this command needs a second series (--spec2)")
    specs = load_spec_argument(args.spec2, require_d0, f.order, f.mode)
    g = specs[0].to_series()
    if g.order != f.order or g.mode != f.mode:
        raise SpecValidationError("--spec2 must match the order and mode of --spec")
    return g


def _compare(name, lhs, rhs, **details):
    n = lhs.first_difference(rhs)
    if n is None:
        return CheckResult.success(name, **details)
    return CheckResult.failure(name, n, lhs[n], rhs[n], **details)


# family

def _family(args, f):
    return family_from_generator(f, args.expansion)


def family_gen(args, f):
    return ([], {"family": family_to_dict(_family(args, f))})


def family_verify(args, f):
    fam = _family(args, f)
    if args.corrupt is not None:
        if not 2 <= args.corrupt <= fam.order:
            raise SpecValidationError("--corrupt expects an index in 2..{:d}".format(fam.order))
        x = UniPoly.x(fam.mode)
        fam = fam.with_poly(args.corrupt, fam[args.corrupt] + x * x)
        _log.info("Injected x^2 into alpha_{:d}".format(args.corrupt))
    return (verify_family(fam), {"family": family_to_dict(fam)})


def family_beta(args, f):
    beta = beta_transform(_family(args, f), _w(args, f.mode))
    return (verify_family(beta), {"family": family_to_dict(beta)})


def family_transform(args, f):
    fam = _family(args, f)
    if args.kind in (SCALE, BETA):
        argument = _w(args, f.mode)
    elif args.kind == PRODUCT:
        argument = family_from_generator(_second_series(args, f, require_d0=True), args.expansion)
    else:
        argument = _second_series(args, f)
    result = transform(fam, args.kind, argument)
    return (verify_family(result), {"family": family_to_dict(result), "kind": args.kind})


def family_multiplicative(args, f):
    failure = first_multiplicativity_failure(_family(args, f))
    return ([], {"multiplicative": failure is None, "first_failure": None if failure is None else list(failure)})


# series

def series_mul(args, f):
    return ([], {"series": series_to_dict(dmul(f, _second_series(args, f)))})


def series_exp(args, f):
    result = dexp(f)
    return ([_compare("log_exp_roundtrip", dlog(result), f)], {"series": series_to_dict(result)})


def series_log(args, f):
    result = dlog(f)
    return ([_compare("exp_log_roundtrip", dexp(result), f)], {"series": series_to_dict(result)})


def series_pow(args, f):
    t = _scalar_argument(args.t, f.mode, "x")
    return ([], {"series": series_to_dict(dpow(f, t))})


def series_deriv(args, f):
    return ([], {"series": series_to_dict(dderiv(f))})


# invert

def invert_solve(args, f):
    w = _w(args, f.mode)
    if args.method != ALL_METHODS:
        result = solve(f, w, args.method, check_residual=False)
        return ([residual_check(f, w, result.g)], {"solution": result.to_dict()})

    solutions = {method: solve(f, w, method, check_residual=False) for method in METHODS}
    reference = solutions[TRIANGULAR].g
    checks = [residual_check(f, w, reference)]
    for method in METHODS:
        if method != TRIANGULAR:
            checks.append(_compare("agreement_" + method, solutions[method].g, reference))
    return (checks, {"solutions": {method: solutions[method].to_dict() for method in METHODS}})


def invert_residual(args, f):
    w = _w(args, f.mode)
    if args.spec2 is not None:
        g = _second_series(args, f, require_d0=True)
    else:
        g = solve(f, w, args.method if args.method != ALL_METHODS else TRIANGULAR, check_residual=False).g
    return ([residual_check(f, w, g)], {"g": series_to_dict(g)})


def invert_expcheck(args, f):
    if args.x is None and f.mode == globals.NUMERIC:
        raise SpecValidationError("numeric mode needs a value for x (--x)")
    x = None if args.x is None else _scalar_argument(args.x, f.mode, "x")
    return ([exp_identity(f, _w(args, f.mode), x)], {})


def invert_inversecheck(args, f):
    return ([inverse_check(f, _w(args, f.mode))], {})


def invert_general(args, f):
    if f.mode != globals.NUMERIC:
        raise SpecValidationError("invert general runs in numeric mode")
    w = _w(args, f.mode)
    method = args.method if args.method != ALL_METHODS else TRIANGULAR
    result = solve_general(f, w, method)
    check = _compare("residual", compose_general(f, result.g, w), result.g, residual_norm=result.residual_norm)
    return ([check], {"solution": result.to_dict()})


def invert_bridge(args, f):
    if f.mode != globals.EXACT:
        raise SpecValidationError("invert bridge runs in exact mode")
    method = args.method if args.method != ALL_METHODS else TRIANGULAR
    return (bridge(f, method), {})


# abscissa

def _descriptor(args):
    if args.descriptor is None:
        raise SpecValidationError("abscissa commands need --descriptor")
    (name, parameters) = args.descriptor
    return descriptor(name, *parameters)


def abscissa_solve(args):
    desc = _descriptor(args)
    w = _positive_w(args)
    result = sigma_g(desc, w)
    (s_min, value) = minimize_F(desc, w)
    checks = []
    if result.case_tag == INTERIOR_MIN:
        if result.interior_residual < INTERIOR_CONDITION_TOLERANCE:
            checks.append(CheckResult.success("interior_condition", residual=result.interior_residual))
        else:
            checks.append(CheckResult.failure("interior_condition", None, result.interior_residual, 0.0))
    gap = abs(result.sigma_g - value)
    if gap < max(DUAL_ROUTE_TOLERANCE, result.certified_error):
        checks.append(CheckResult.success("dual_route", gap=gap))
    else:
        checks.append(CheckResult.failure("dual_route", None, result.sigma_g, value, gap=gap))
    return (checks, {"descriptor": desc.to_dict(), "w": w, "abscissa": result.to_dict(), "minimize_F": [s_min, value]})


def abscissa_minimize(args):
    desc = _descriptor(args)
    w = _positive_w(args)
    (s_min, value) = minimize_F(desc, w)
    return ([], {"descriptor": desc.to_dict(), "w": w, "s_min": s_min, "F_min": value})


def abscissa_curve(args):
    desc = _descriptor(args)
    w = _positive_w(args)
    rows = curve_dump(desc, w, args.grid or [])
    return ([], {"descriptor": desc.to_dict(), "w": w, "curve": {"header": list(CURVE_HEADER), "rows": rows}})


SERIES_COMMANDS = {
    ("family", "gen"): (family_gen, True),
    ("family", "verify"): (family_verify, True),
    ("family", "beta"): (family_beta, True),
    ("family", "transform"): (family_transform, True),
    ("family", "multiplicative"): (family_multiplicative, True),
    ("series", "mul"): (series_mul, False),
    ("series", "exp"): (series_exp, True),
    ("series", "log"): (series_log, False),
    ("series", "pow"): (series_pow, False),
    ("series", "deriv"): (series_deriv, False),
    ("invert", "solve"): (invert_solve, True),
    ("invert", "residual"): (invert_residual, True),
    ("invert", "expcheck"): (invert_expcheck, True),
    ("invert", "inversecheck"): (invert_inversecheck, True),
    ("invert", "general"): (invert_general, False),
    ("invert", "bridge"): (invert_bridge, True),
}

ABSCISSA_COMMANDS = {
    ("abscissa", "solve"): abscissa_solve,
    ("abscissa", "minimize"): abscissa_minimize,
    ("abscissa", "curve"): abscissa_curve,
}

COMMANDS = tuple(sorted(list(SERIES_COMMANDS) + list(ABSCISSA_COMMANDS)))


def _run_series_command(args, key):
    (handler, require_d0) = SERIES_COMMANDS[key]
    if args.spec is None:
        raise SpecValidationError("this command needs a series (--spec)")
    specs = load_spec_argument(args.spec, require_d0, args.order, args.mode)
    runs = []
    checks = []
    for (index, spec) in enumerate(specs):
        if spec.builtin == "random_rational" and spec.seed is None and args.seed is not None:
            spec.seed = args.seed
        _log.info("Running {:s} on {:s}".format(" ".join(key), serialize(spec)))
        (spec_checks, results) = handler(args, spec.to_series())
        for check in spec_checks:
            check.details["spec"] = index
        checks.extend(spec_checks)
        results["spec"] = spec.to_dict()
        runs.append(results)
    return (checks, runs[0] if len(runs) == 1 else {"runs": runs})


def run(args, argv=None):
    """
        Executes the parsed command line.

        :return: Report
    """
    key = (args.group, args.action)
    assert key in COMMANDS, "unknown command {:s}".format(" ".join(key))
    started = time.perf_counter()
    if key in ABSCISSA_COMMANDS:
        (checks, results) = ABSCISSA_COMMANDS[key](args)
    else:
        (checks, results) = _run_series_command(args, key)
    report = Report(
        list(argv) if argv is not None else list(key),
        checks, results, time.perf_counter() - started
    )
    _log.info("{:s}: {:d} checks, {:s}".format(" ".join(key), len(checks), "pass" if report.passed else "FAIL"))
    return report


def emit(report, args):
    """
        Writes the report once, to --out or stdout, as JSON or CSV.
    """
    stream = open(str(args.out), "w", newline="") if args.out is not None else sys.stdout
    try:
        if args.format == "csv":
            curve = report.results.get("curve")
            if curve is not None:
                write_curve(curve["rows"], stream)
            else:
                report.write_checks_csv(stream)
        else:
            stream.write(report.to_json())
            stream.write("\n")
    finally:
        if stream is not sys.stdout:
            stream.close()
