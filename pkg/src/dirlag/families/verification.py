"""
    Identity checks on convolution families.

    Every check runs in the polynomial ring of the family. Exact families are compared as
    polynomials over Q[x, y, w, L_2, L_3, ...]; numeric families compare coefficients within
    tolerance, and the two variable identity is sampled at fixed complex points.
"""

import logging

from dirlag import globals
from dirlag.checks import CheckResult
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly, poly_integrate
from dirlag.dseries import arith
from dirlag.families.family import ConvolutionFamily

_log = logging.getLogger(logger_module_name(__file__))

CONVOLUTION = "convolution"
DEGREE = "degree"
VANISHING_AT_ZERO = "vanishing_at_zero"
PRIME_HAT_CONSTANT = "prime_hat_constant"
INTEGRAL_RECURRENCE = "integral_recurrence"
LOG_DERIVATIVE = "log_derivative"
CHECKS = (CONVOLUTION, DEGREE, VANISHING_AT_ZERO, PRIME_HAT_CONSTANT, INTEGRAL_RECURRENCE, LOG_DERIVATIVE)

# (x, y) pairs for the numeric convolution identity
SAMPLE_POINTS = (
    (0.3 + 0.1j, -0.7 + 0.2j),
    (1.1 + 0j, 0.45 - 0.3j),
    (-1.3 + 0.6j, 2.2 + 0j),
)


def _convolution_at(fam, x, y):
    at_x = fam.values_at(x)
    at_y = fam.values_at(y)
    at_sum = fam.values_at(x + y)
    for n in range(1, fam.order + 1):
        rhs = scalars.zero(fam.mode)
        for d in arith.divisors(n):
            if scalars.is_zero(at_x[d - 1]) or scalars.is_zero(at_y[n // d - 1]):
                continue
            rhs = rhs + at_x[d - 1] * at_y[n // d - 1]
        if not scalars.close(at_sum[n - 1], rhs):
            return (n, at_sum[n - 1], rhs)
    return None


def check_convolution(fam):
    """
        alpha_n(x + y) = sum over d | n of alpha_d(x) alpha_{n/d}(y).
    """
    if fam.mode == globals.EXACT:
        points = ((SymbolicScalar.symbol("x"), SymbolicScalar.symbol("y")),)
    else:
        points = SAMPLE_POINTS
    for (x, y) in points:
        failure = _convolution_at(fam, x, y)
        if failure is not None:
            (n, lhs, rhs) = failure
            return CheckResult.failure(CONVOLUTION, n, lhs, rhs)
    return CheckResult.success(CONVOLUTION)


def check_degree(fam):
    for (n, p) in fam.items():
        if p.degree > arith.big_omega(n):
            return CheckResult.failure(DEGREE, n, p.degree, arith.big_omega(n))
    return CheckResult.success(DEGREE)


def check_vanishing_at_zero(fam):
    for n in range(2, fam.order + 1):
        if not scalars.is_zero(fam[n].constant_term):
            return CheckResult.failure(VANISHING_AT_ZERO, n, fam[n].constant_term, 0)
    return CheckResult.success(VANISHING_AT_ZERO)


def check_prime_hat_constant(fam):
    for p in arith.primes_up_to(fam.order):
        if fam[p].degree > 1:
            return CheckResult.failure(PRIME_HAT_CONSTANT, p, fam.hat(p), fam.hat(p).constant_term)
    return CheckResult.success(PRIME_HAT_CONSTANT)


def check_integral_recurrence(fam):
    """
        alpha_n(x) = sum over d | n, d >= 2 of hat(alpha_d)(0) * integral_0^x alpha_{n/d}(y) dy.
    """
    integrals = {}
    for n in range(2, fam.order + 1):
        rhs = UniPoly.zero(fam.mode)
        for d in arith.divisors(n)[1:]:
            weight = fam[d].coefficient(1)
            if scalars.is_zero(weight):
                continue
            if n // d not in integrals:
                integrals[n // d] = poly_integrate(fam[n // d])
            rhs = rhs + integrals[n // d] * weight
        if not fam[n].is_close(rhs):
            return CheckResult.failure(INTEGRAL_RECURRENCE, n, fam[n], rhs)
    return CheckResult.success(INTEGRAL_RECURRENCE)


def check_log_derivative(fam):
    """
        ln(n) hat(alpha_n)(x) = sum over d | n, d >= 2 of ln(d) hat(alpha_d)(0) alpha_{n/d}(x).

        Written multiplied through by ln(n); exact mode never divides by a log symbol.
    """
    for n in range(2, fam.order + 1):
        lhs = fam.hat(n) * arith.log_value(n, fam.mode)
        rhs = UniPoly.zero(fam.mode)
        for d in arith.divisors(n)[1:]:
            weight = fam[d].coefficient(1)
            if scalars.is_zero(weight) or fam[n // d].is_zero():
                continue
            rhs = rhs + fam[n // d] * (arith.log_value(d, fam.mode) * weight)
        if not lhs.is_close(rhs):
            return CheckResult.failure(LOG_DERIVATIVE, n, lhs, rhs)
    return CheckResult.success(LOG_DERIVATIVE)


__check_functions = {
    CONVOLUTION: check_convolution,
    DEGREE: check_degree,
    VANISHING_AT_ZERO: check_vanishing_at_zero,
    PRIME_HAT_CONSTANT: check_prime_hat_constant,
    INTEGRAL_RECURRENCE: check_integral_recurrence,
    LOG_DERIVATIVE: check_log_derivative,
}


def verify_family(fam, checks=CHECKS):
    """
        Runs the requested identity checks.

        :return: list of CheckResult in the order of `checks`
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    for name in checks:
        assert name in CHECKS, "unknown check {:s}".format(repr(name))
    results = [__check_functions[name](fam) for name in checks]
    for result in results:
        if not result.passed:
            _log.info("Check {:s} failed at n = {:d}".format(result.name, result.index))
    return results


def first_multiplicativity_failure(fam):
    """
        :return: first coprime pair (m, n) with alpha_{mn} != alpha_m alpha_n, or None
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    for m in range(2, fam.order + 1):
        for n in range(m + 1, fam.order // m + 1):
            if arith.are_coprime(m, n) and not fam[m * n].is_close(fam[m] * fam[n]):
                return (m, n)
    return None


def is_multiplicative(fam):
    return first_multiplicativity_failure(fam) is None
