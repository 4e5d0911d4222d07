"""
    Abscissa of absolute convergence of g, the solution of f(s - w g(s)) = g(s), for f with
    nonnegative coefficients and w > 0.

    sigma_g is the minimum over s >= sigma_f of the convex F(s) = s + w f(s). When
    f'(sigma_f+) < -1/w the minimum is interior, at the unique s0 with f'(s0) = -1/w;
    otherwise it sits on the boundary and sigma_g = sigma_f + w f(sigma_f).
"""

import csv
import logging
import math

from scipy.optimize import brentq

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.abscissa.descriptors import AnalyticDescriptor
from dirlag.abscissa.evaluation import eval_f, eval_fprime
from dirlag.abscissa.exceptions import ClassificationInconclusive, BracketFailure, TailBoundUnreachable

_log = logging.getLogger(logger_module_name(__file__))

INTERIOR_MIN = "interior_min"
BOUNDARY_MIN = "boundary_min"

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2

CURVE_HEADER = ("s", "F", "f", "fprime", "err")

# F grows at least linearly to the right, so the bracket never needs to leave this range
_MAX_BRACKET_WIDTH = 2.0 ** 40


class AbscissaResult(object):
    __slots__ = ("sigma_g", "case_tag", "s0", "certified_error", "derivative_limit", "interior_residual")

    def __init__(self, sigma_g, case_tag, s0, certified_error, derivative_limit, interior_residual=None):
        assert case_tag in (INTERIOR_MIN, BOUNDARY_MIN), "unknown case {:s}".format(repr(case_tag))
        self.sigma_g = sigma_g
        self.case_tag = case_tag
        self.s0 = s0
        self.certified_error = certified_error
        self.derivative_limit = derivative_limit
        self.interior_residual = interior_residual

    def __repr__(self):
        return "<AbscissaResult {:s} sigma_g={:.17g} +- {:.3g}>".format(
            self.case_tag, self.sigma_g, self.certified_error
        )

    def to_dict(self):
        result = {
            "sigma_g": self.sigma_g,
            "case": self.case_tag,
            "s0": self.s0,
            "certified_error": self.certified_error,
            "derivative_limit": None if math.isinf(self.derivative_limit) else self.derivative_limit,
        }
        if self.interior_residual is not None:
            result["interior_residual"] = self.interior_residual
        return result


def _check_arguments(desc, w):
    assert isinstance(desc, AnalyticDescriptor), "desc expected to be AnalyticDescriptor. Got {:s}".format(
        repr(desc)
    )
    assert isinstance(w, (int, float)) and not isinstance(w, bool) and w > 0, \
        "w expected to be a positive real. Got {:s}".format(repr(w))
    return float(w)


def _probe_boundary(desc, target):
    """
        :return: (limit estimate of f'(sigma_f+), error band, lowest point known to satisfy
                  f'(point) < target or None)
    """
    sigma = desc.sigma_f
    if desc.converges_at_boundary(1):
        at_boundary = eval_fprime(desc, sigma)
        below = sigma if at_boundary.value < target - at_boundary.error else None
        return (at_boundary.value, at_boundary.error, below)

    previous = None
    for j in range(1, globals.DERIVATIVE_PROBE_DEPTH + 1):
        point = sigma + 2.0 ** (-j)
        probe = eval_fprime(desc, point)
        if probe.value < target - probe.error:
            return (probe.value, probe.error, point)
        if abs(probe.value) > globals.DIVERGENCE_THRESHOLD:
            _log.debug("f' exceeds {:g} at sigma_f + 2^-{:d}".format(globals.DIVERGENCE_THRESHOLD, j))
            return (-math.inf, 0.0, None)
        band = probe.error + (abs(probe.value - previous) if previous is not None else math.inf)
        previous = probe.value
    return (previous, band, None)


def _interior_root(desc, w, lower):
    target = -1.0 / w
    sigma = desc.sigma_f
    upper = lower + 1.0
    while eval_fprime(desc, upper).value < target:
        upper = sigma + 2.0 * (upper - sigma)
        if upper - sigma > _MAX_BRACKET_WIDTH:
            raise BracketFailure("f' stays below -1/w up to s = {:.6g}".format(upper))
    return brentq(
        lambda s: eval_fprime(desc, s).value - target, lower, upper,
        xtol=globals.ROOT_TOLERANCE, maxiter=200
    )


def sigma_g(desc, w):
    """
        :return: AbscissaResult for the solution g of f(s - w g(s)) = g(s)
    """
    w = _check_arguments(desc, w)
    target = -1.0 / w
    sigma = desc.sigma_f
    (limit, band, below) = _probe_boundary(desc, target)

    if below is not None or limit == -math.inf:
        lower = below
        if lower is None:
            # f' diverged at the boundary without crossing -1/w yet
            lower = sigma + 2.0 ** (-globals.DERIVATIVE_PROBE_DEPTH)
            if eval_fprime(desc, lower).value >= target:
                raise ClassificationInconclusive(limit, target, band)
        s0 = _interior_root(desc, w, lower)
        at_root = eval_f(desc, s0)
        residual = abs(eval_fprime(desc, s0).value - target)
        result = AbscissaResult(
            s0 + w * at_root.value, INTERIOR_MIN, s0,
            w * at_root.error + globals.ROOT_TOLERANCE, limit, residual
        )
        _log.debug("Interior minimum: {:s}".format(repr(result)))
        return result

    if abs(limit - target) <= band:
        raise ClassificationInconclusive(limit, target, band)
    if not desc.converges_at_boundary(0):
        raise TailBoundUnreachable("{:s} diverges at its abscissa".format(desc.name))
    at_boundary = eval_f(desc, sigma)
    result = AbscissaResult(sigma + w * at_boundary.value, BOUNDARY_MIN, None, w * at_boundary.error, limit)
    _log.debug("Boundary minimum: {:s}".format(repr(result)))
    return result


def golden_section(function, a, b, tolerance):
    """
        Minimum of a unimodal function on [a, b].

        :return: (argmin, minimum)
    """
    (a, b) = (min(a, b), max(a, b))
    h = b - a
    if h <= tolerance:
        middle = (a + b) / 2
        return (middle, function(middle))
    steps = int(math.ceil(math.log(tolerance / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = function(c)
    yd = function(d)
    for _ in range(steps - 1):
        if yc < yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = function(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = function(d)
    return (c, yc) if yc < yd else (d, yd)


def _bracket(big_f, sigma, boundary_allowed):
    middle = sigma + 1.0
    at_middle = big_f(middle)

    step = 1.0
    right = middle + step
    at_right = big_f(right)
    while at_right < at_middle:
        (middle, at_middle) = (right, at_right)
        step *= 2.0
        if step > _MAX_BRACKET_WIDTH:
            raise BracketFailure("F keeps decreasing to the right of {:.6g}".format(middle))
        right = middle + step
        at_right = big_f(right)

    left = sigma + (middle - sigma) / 2
    at_left = big_f(left)
    depth = 1
    while at_left < at_middle:
        (middle, at_middle) = (left, at_left)
        depth += 1
        if depth > globals.DERIVATIVE_PROBE_DEPTH:
            if boundary_allowed:
                return (sigma, right)
            raise BracketFailure("F keeps decreasing towards the abscissa {:.6g}".format(sigma))
        left = sigma + (middle - sigma) / 2
        at_left = big_f(left)
    return (left, right)


def minimize_F(desc, w):
    """
        Golden-section minimum of F(s) = s + w f(s) on a bracket grown outwards from sigma_f + 1.

        :return: (s*, F(s*))
    """
    w = _check_arguments(desc, w)
    sigma = desc.sigma_f

    def big_f(s):
        return s + w * eval_f(desc, s).value

    (left, right) = _bracket(big_f, sigma, desc.converges_at_boundary(0))
    (s_star, minimum) = golden_section(big_f, left, right, globals.GOLDEN_SECTION_TOLERANCE)
    if left == sigma and big_f(sigma) <= minimum:
        (s_star, minimum) = (sigma, big_f(sigma))
    _log.debug("Golden section minimum of F at s = {:.17g}: {:.17g}".format(s_star, minimum))
    return (s_star, minimum)


def curve_dump(desc, w, grid):
    """
        :return: rows (s, F(s), f(s), f'(s), err) for every s of the grid
    """
    w = _check_arguments(desc, w)
    rows = []
    for s in grid:
        s = float(s)
        assert s > desc.sigma_f, "grid point {:.17g} not above the abscissa {:.17g}".format(s, desc.sigma_f)
        value = eval_f(desc, s)
        slope = eval_fprime(desc, s)
        error = max(w * value.error, slope.error)
        rows.append((s, s + w * value.value, value.value, slope.value, error))
    return rows


def write_curve(rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CURVE_HEADER)
    for row in rows:
        writer.writerow(["{:.17g}".format(value) for value in row])
