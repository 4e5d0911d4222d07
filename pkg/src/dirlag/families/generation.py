"""
    Building convolution families from a generating series or from sampled values.
"""

import logging
from fractions import Fraction

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly, binomial_poly
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import dpowers, dexp
from dirlag.dseries.exceptions import NotInD0
from dirlag.families.family import ConvolutionFamily
from dirlag.families.exceptions import InvalidFamilyValues

_log = logging.getLogger(logger_module_name(__file__))

POWER_SUMS = "power_sums"
EXPONENTIAL = "exponential"


def family_from_generator(f, expansion=POWER_SUMS):
    """
        alpha_n(x) = coefficient at n of exp(x f).

        power_sums collects x^k / k! times the coefficient at n of f^k, one power of f at a
        time. exponential expands exp(x f) with x kept as an indeterminate and reads each
        coefficient back as a polynomial in x (exact mode only).
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    assert expansion in (POWER_SUMS, EXPONENTIAL), "unknown expansion {:s}".format(repr(expansion))
    if not f.in_d0():
        raise NotInD0(f[1])
    mode = f.mode

    if expansion == EXPONENTIAL:
        assert mode == globals.EXACT, "the exponential expansion keeps x symbolic and is exact only"
        expanded = dexp(f.scale(SymbolicScalar.symbol("x")))
        polys = [UniPoly.from_scalar(c, "x") for c in expanded]
    else:
        powers = dpowers(f)
        weights = [scalars.factorial_inverse(k, mode) for k in range(1, len(powers) + 1)]
        polys = [UniPoly.constant(1, mode)]
        for n in range(2, f.order + 1):
            polys.append(
                UniPoly([0] + [power[n] * weight for (power, weight) in zip(powers, weights)], mode)
            )

    _log.debug("Generated family of order {:d} ({:s})".format(f.order, expansion))
    return ConvolutionFamily(polys, mode)


def _reciprocal(y0, mode):
    if mode == globals.EXACT:
        value = scalars.rational_value(scalars.coerce(y0, mode))
        if value == 0:
            raise InvalidFamilyValues("y0 must be nonzero")
        return Fraction(1) / value
    value = scalars.coerce(y0, mode)
    if value == 0:
        raise InvalidFamilyValues("y0 must be nonzero")
    return 1 / value


def family_from_values(values, y0=1, mode=None):
    """
        Rebuilds the family whose values at x = y0 are `values`.

        With phi = sum values[n] n^{-s}, alpha_n(x) is the coefficient at n of phi^(x / y0),
        expanded as sum_j C(x / y0, j) (phi - epsilon)^j.

        :param values: DirichletSeries or sequence alpha_1(y0), ..., alpha_N(y0)
    """
    if isinstance(values, DirichletSeries):
        phi = values if mode is None or mode == values.mode else DirichletSeries(values.coefficients, mode)
    else:
        phi = DirichletSeries(values, globals.EXACT if mode is None else mode)
    mode = phi.mode
    if not phi.is_unit():
        raise InvalidFamilyValues("alpha_1(y0) must be 1. Got {:s}".format(str(phi[1])))
    reciprocal = _reciprocal(y0, mode)

    powers = dpowers(phi - DirichletSeries.identity(phi.order, mode))
    binomials = [binomial_poly(j, mode).scale_variable(reciprocal) for j in range(1, len(powers) + 1)]
    polys = [UniPoly.constant(1, mode)]
    for n in range(2, phi.order + 1):
        poly = UniPoly.zero(mode)
        for (power, binomial) in zip(powers, binomials):
            if not scalars.is_zero(power[n]):
                poly = poly + binomial * power[n]
        polys.append(poly)
    return ConvolutionFamily(polys, mode)
