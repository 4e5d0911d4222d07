"""
    Three independent solvers for f(s - w g(s)) = g(s), f in D_0.

    closed_form  g_n = hat(alpha_n)(w ln n), alpha generated by f.
    triangular   g_n = sum over k | n, k >= 2 of c_k [exp(w ln(k) g)]_{n/k}. Only g_m with
                 m <= n/2 enter, and each exp(w ln(k) g) is grown one coefficient at a time
                 through the Omega-graded recursion.
    fixed_point  g <- f(s - w g(s)) starting from f. After j iterations the iterate is final
                 on every n <= 2^(j+1).
"""

import logging

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import compose_inner, graded_exp_step
from dirlag.dseries.exceptions import NotInD0
from dirlag.families.generation import family_from_generator
from dirlag.inversion.result import InversionResult, CLOSED_FORM, TRIANGULAR, FIXED_POINT, METHODS
from dirlag.inversion.exceptions import FixedPointNotConverged

_log = logging.getLogger(logger_module_name(__file__))


def _check_problem(f, w):
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    if not f.in_d0():
        raise NotInD0(f[1])
    return scalars.coerce(w, f.mode)


def solve_closed_form(f, w):
    w = _check_problem(f, w)
    family = family_from_generator(f)
    values = [scalars.zero(f.mode)]
    for n in range(2, f.order + 1):
        values.append(family.hat(n).evaluate(w * arith.log_value(n, f.mode)))
    return DirichletSeries(values, f.mode)


def solve_triangular(f, w):
    w = _check_problem(f, w)
    mode = f.mode
    g = [scalars.zero(mode)] * f.order
    # exponentials[k] holds the known coefficients of exp(w ln(k) g), index m at position m - 1
    exponentials = {k: [scalars.one(mode)] for k in f.support()}
    weights = {k: w * arith.log_value(k, mode) for k in f.support()}

    def exp_coefficient(k, m):
        known = exponentials[k]
        weight = weights[k]
        while len(known) < m:
            step = len(known) + 1
            known.append(
                graded_exp_step(step, lambda d: weight * g[d - 1], lambda j: known[j - 1], mode)
            )
        return known[m - 1]

    for n in range(2, f.order + 1):
        total = scalars.zero(mode)
        for k in arith.divisors(n)[1:]:
            c_k = f[k]
            if scalars.is_zero(c_k):
                continue
            total = total + c_k * exp_coefficient(k, n // k)
        g[n - 1] = total
    return DirichletSeries(g, mode)


def _stable(previous, current):
    if current.mode == globals.EXACT:
        return previous == current
    difference = (current - previous).max_norm()
    return difference < globals.FIXED_POINT_TOLERANCE * (1.0 + current.max_norm())


def solve_fixed_point(f, w):
    """
        :return: (g, iterates) with iterates[0] = f and iterates[-1] = g
    """
    w = _check_problem(f, w)
    cap = (f.order - 1).bit_length() + globals.FIXED_POINT_EXTRA_ITERATIONS
    iterates = [f]
    for _ in range(cap):
        following = compose_inner(f, iterates[-1], w)
        iterates.append(following)
        if _stable(iterates[-2], following):
            _log.debug("Fixed point stable after {:d} iterations at order {:d}".format(len(iterates) - 1, f.order))
            return (following, iterates)
    if f.mode == globals.EXACT:
        raise FixedPointNotConverged(cap)
    _log.warning("Fixed point not stabilised after {:d} iterations at order {:d}".format(cap, f.order))
    return (iterates[-1], iterates)


def residual(f, g, w):
    """
        f(s - w g(s)) - g(s) truncated at N.
    """
    return compose_inner(f, g, w) - g


def solve(f, w, method=TRIANGULAR, check_residual=True):
    """
        Solves f(s - w g(s)) = g(s) for g in D_0.

        :param method: closed_form, triangular or fixed_point
        :param check_residual: attach the residual of the returned g to the result
    """
    assert method in METHODS, "method expected to be one of {:s}. Got {:s}".format(str(METHODS), repr(method))
    iterates = None
    if method == CLOSED_FORM:
        g = solve_closed_form(f, w)
    elif method == TRIANGULAR:
        g = solve_triangular(f, w)
    else:
        (g, iterates) = solve_fixed_point(f, w)
    rest = residual(f, g, w) if check_residual else None
    result = InversionResult(
        g, method, rest,
        iterations=None if iterates is None else len(iterates) - 1,
        iterates=iterates
    )
    _log.debug("Solved at order {:d}: {:s}".format(f.order, result.summary()))
    return result
