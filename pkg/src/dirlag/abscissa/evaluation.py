"""
    Certified evaluation of a descriptor and its derivatives at real s.

    The d-th derivative is (-1)^d sum_{n >= 2} phi(n) with phi(t) = t^{-u} (ln t)^e,
    u = s + a and e = d - b. Terms below the cutoff M are summed directly. The rest is
    replaced by its Euler-Maclaurin expansion

        sum_{n >= M} phi(n) = int_M^oo phi + phi(M)/2 - phi'(M)/12 + phi'''(M)/720 + R,

    where the integral is an upper incomplete gamma function and |R| <= |phi'''(M)|/720.
    M doubles until the bound meets the tolerance or passes the configured cap.
"""

import logging
import math

import mpmath
import numpy as np

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.abscissa.descriptors import AnalyticDescriptor
from dirlag.abscissa.exceptions import TailBoundUnreachable

_log = logging.getLogger(logger_module_name(__file__))

_WORKING_DIGITS = 30


class EvalResult(object):
    __slots__ = ("value", "error", "cutoff", "converged")

    def __init__(self, value, error, cutoff, converged):
        self.value = value
        self.error = error
        self.cutoff = cutoff
        self.converged = converged

    def __repr__(self):
        return "EvalResult(value={:.17g}, error={:.3g}, cutoff={:d}, converged={})".format(
            self.value, self.error, self.cutoff, self.converged
        )


def _tail(u, e, cutoff):
    """
        :return: (sum_{n >= cutoff} phi(n) estimate, truncation bound)
    """
    with mpmath.workdps(_WORKING_DIGITS):
        u = mpmath.mpf(u)
        e = mpmath.mpf(e)
        m = mpmath.mpf(cutoff)
        log_m = mpmath.log(m)

        def phi(t):
            return t ** (-u) * mpmath.log(t) ** e

        if u == 1:
            integral = log_m ** (e + 1) / (-(e + 1))
        else:
            spread = u - 1
            integral = spread ** (-(e + 1)) * mpmath.gammainc(e + 1, spread * log_m)

        first = mpmath.diff(phi, m, 1)
        third = mpmath.diff(phi, m, 3)
        estimate = integral + phi(m) / 2 - first / 12 + third / 720
        return (float(estimate), float(abs(third) / 720))


def _partial_sum(u, e, low, high):
    """
        sum_{low <= n < high} phi(n) and the sum of magnitudes.
    """
    if high <= low:
        return (0.0, 0.0)
    logs = np.log(np.arange(low, high, dtype=np.float64))
    terms = np.exp(-u * logs) * logs ** e
    return (float(np.sum(terms)), float(np.sum(np.abs(terms))))


def _tail_converges(u, e):
    return u > 1 or (u == 1 and e < -1)


def eval_derivative(desc, s, derivative=0, tolerance=None, strict=False):
    """
        d-th derivative of the descriptor series at real s, with an error bound.
        The tolerance is absolute below magnitude 1 and relative above it.

        :param strict: raise TailBoundUnreachable instead of returning an unconverged result
    """
    assert isinstance(desc, AnalyticDescriptor), "desc expected to be AnalyticDescriptor. Got {:s}".format(
        repr(desc)
    )
    assert isinstance(derivative, int) and derivative >= 0, \
        "derivative expected to be a non negative int. Got {:s}".format(repr(derivative))
    if tolerance is None:
        tolerance = globals.EVALUATION_TOLERANCE
    s = float(s)
    u = s + desc.a
    if abs(u - 1.0) < 4 * np.finfo(np.float64).eps:
        u = 1.0
    e = derivative - desc.b
    if not _tail_converges(u, e):
        raise TailBoundUnreachable(
            "{:s} derivative {:d} diverges at s = {:.17g}".format(desc.name, derivative, s)
        )

    sign = -1.0 if derivative % 2 else 1.0
    cutoff = globals.INITIAL_CUTOFF
    (partial, magnitude) = _partial_sum(u, e, 2, cutoff)
    while True:
        (tail, bound) = _tail(u, e, cutoff)
        rounding = np.finfo(np.float64).eps * math.log2(cutoff) * (magnitude + abs(tail))
        error = bound + rounding
        if error <= tolerance * max(1.0, abs(partial + tail)):
            return EvalResult(sign * (partial + tail), error, cutoff, True)
        if 2 * cutoff > globals.MAX_CUTOFF:
            break
        (extra, extra_magnitude) = _partial_sum(u, e, cutoff, 2 * cutoff)
        partial += extra
        magnitude += extra_magnitude
        cutoff *= 2

    message = "{:s} derivative {:d} at s = {:.17g}: bound {:.3g} above {:.3g} with cutoff {:d}".format(
        desc.name, derivative, s, error, tolerance, cutoff
    )
    if strict:
        raise TailBoundUnreachable(message)
    _log.warning(message)
    return EvalResult(sign * (partial + tail), error, cutoff, False)


def eval_f(desc, s, tolerance=None, strict=False):
    return eval_derivative(desc, s, 0, tolerance, strict)


def eval_fprime(desc, s, tolerance=None, strict=False):
    return eval_derivative(desc, s, 1, tolerance, strict)


def eval_fsecond(desc, s, tolerance=None, strict=False):
    return eval_derivative(desc, s, 2, tolerance, strict)
