"""
    Series with a nonzero constant term.

    With c_1 = f_1 the substitution g = c_1 + G turns f(s - w g(s)) = g(s) into
    F(s - w G(s)) = G(s) for F(s) = f(s - w c_1) - c_1, which lies in D_0.
"""

import logging

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import compose_inner, dshift
from dirlag.inversion.result import InversionResult, TRIANGULAR
from dirlag.inversion.solvers import solve

_log = logging.getLogger(logger_module_name(__file__))


def compose_general(f, g, w):
    """
        Truncation of f(s - w g(s)) for arbitrary constant terms.

        k^{w g(s)} = k^{w g_1} exp(w ln(k) (g(s) - g_1)), so the constant term of g becomes a
        vertical shift of f and the rest is an inner composition.
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    f.check_compatible(g)
    w = scalars.coerce(w, f.mode)
    identity = DirichletSeries.identity(f.order, f.mode)
    shifted = dshift(f, w * g[1])
    head = identity.scale(shifted[1])
    return head + compose_inner(shifted - head, g - identity.scale(g[1]), w)


def solve_general(f, w, method=TRIANGULAR):
    """
        Solves f(s - w g(s)) = g(s) when c_1 may be nonzero. Numeric mode only.
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    assert f.mode == globals.NUMERIC, "the constant term shift leaves the rationals; use numeric mode"
    w = scalars.coerce(w, f.mode)
    c_1 = f[1]
    if scalars.is_zero(c_1):
        return solve(f, w, method)

    identity = DirichletSeries.identity(f.order, f.mode)
    shifted = dshift(f, w * c_1) - identity.scale(c_1)
    inner = solve(shifted, w, method, check_residual=False)
    g = identity.scale(c_1) + inner.g
    rest = compose_general(f, g, w) - g
    result = InversionResult(g, method, rest, iterations=inner.iterations, iterates=inner.iterates)
    _log.debug("Solved with constant term {:s}: {:s}".format(str(c_1), result.summary()))
    return result
