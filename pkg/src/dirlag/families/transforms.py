"""
    Constructions that turn convolution families into convolution families.
"""

import logging

from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.polyalg.unipoly import UniPoly, poly_shift
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.families.family import ConvolutionFamily
from dirlag.families.exceptions import NotCompletelyMultiplicative

_log = logging.getLogger(logger_module_name(__file__))

SCALE = "scale"
PRODUCT = "product"
TWIST = "twist"
BETA = "beta"
KINDS = (SCALE, PRODUCT, TWIST, BETA)


def beta_transform(fam, w):
    """
        beta_1 = 1 and, for n >= 2, beta_n(x) = x * hat(alpha_n)(x + w ln n).

        This is x / (x + w ln n) * alpha_n(x + w ln n) with the division carried out on the
        hat polynomial. Exact mode writes ln n as its log symbol expansion, so w may be a
        rational or an indeterminate. beta_transform(beta_transform(fam, w), -w) == fam.
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    mode = fam.mode
    w = scalars.coerce(w, mode)
    polys = [UniPoly.constant(1, mode)]
    for n in range(2, fam.order + 1):
        shifted = poly_shift(fam.hat(n), w * arith.log_value(n, mode))
        polys.append(shifted.multiply_by_x())
    return ConvolutionFamily(polys, mode)


def scale(fam, w):
    """
        gamma_n(x) = alpha_n(w x).
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    return ConvolutionFamily([p.scale_variable(w) for p in fam.polys], fam.mode)


def product(fam, other):
    """
        gamma_n(x) = sum over d | n of alpha_d(x) beta_{n/d}(x).
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    assert isinstance(other, ConvolutionFamily), "other expected to be ConvolutionFamily. Got {:s}".format(
        repr(other)
    )
    assert fam.order == other.order, "family orders differ: {:d} and {:d}".format(fam.order, other.order)
    assert fam.mode == other.mode, "family modes differ: {:s} and {:s}".format(fam.mode, other.mode)
    polys = []
    for n in range(1, fam.order + 1):
        total = UniPoly.zero(fam.mode)
        for d in arith.divisors(n):
            if fam[d].is_zero() or other[n // d].is_zero():
                continue
            total = total + fam[d] * other[n // d]
        polys.append(total)
    return ConvolutionFamily(polys, fam.mode)


def check_completely_multiplicative(c):
    """
        Raises NotCompletelyMultiplicative at the first pair (m, n) with c_{mn} != c_m c_n.
    """
    assert isinstance(c, DirichletSeries), "c expected to be DirichletSeries. Got {:s}".format(repr(c))
    if not c.is_unit():
        raise NotCompletelyMultiplicative(1, 1)
    for m in range(2, c.order + 1):
        for n in range(m, c.order // m + 1):
            if not scalars.close(c[m * n], c[m] * c[n]):
                raise NotCompletelyMultiplicative(m, n)


def twist(fam, c):
    """
        gamma_n(x) = c_n alpha_n(x), for completely multiplicative c.

        :param c: DirichletSeries or sequence c_1, ..., c_N
    """
    assert isinstance(fam, ConvolutionFamily), "fam expected to be ConvolutionFamily. Got {:s}".format(repr(fam))
    if not isinstance(c, DirichletSeries):
        c = DirichletSeries(c, fam.mode)
    assert c.order == fam.order, "twist sequence length {:d} differs from family order {:d}".format(
        c.order, fam.order
    )
    check_completely_multiplicative(c)
    return ConvolutionFamily([p * c[n] for (n, p) in fam.items()], fam.mode)


def transform(fam, kind, argument):
    """
        Dispatches one construction by name: scale(w), product(other), twist(c) or beta(w).
    """
    assert kind in KINDS, "kind expected to be one of {:s}. Got {:s}".format(str(KINDS), repr(kind))
    _log.debug("Applying {:s} transform to {:s}".format(kind, fam.summary()))
    if kind == SCALE:
        return scale(fam, argument)
    if kind == PRODUCT:
        return product(fam, argument)
    if kind == TWIST:
        return twist(fam, argument)
    return beta_transform(fam, argument)
