"""
    Classical Lagrange inversion for power series, and the bridge to the Dirichlet solver.

    The power series side never touches Dirichlet code: with A(z) = sum a_n z^n, a_0 = 1,
    B(z) solving A(z B(z)^w) = B(z) has B(z)^x = sum b_n(x) z^n where
    b_n(x) = x / (x + n w) * a_n(x + n w) and a_n(t) is the coefficient of A(z)^t.
    Every a_n(t), n >= 1, vanishes at t = 0, so b_n(x) is computed as x * hat(a_n)(x + n w).

    Restricting a Dirichlet series to the powers of 2 and writing z = 2^{-s} turns one
    problem into the other, with v = w ln 2.
"""

import logging

from dirlag import globals
from dirlag.checks import CheckResult
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly, binomial_poly
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import dexp
from dirlag.inversion.result import TRIANGULAR
from dirlag.inversion.solvers import solve
from dirlag.inversion.exceptions import InvalidPowerSeries, SupportViolation

_log = logging.getLogger(logger_module_name(__file__))


class PowerSeriesCoeffs(object):
    """
        Truncated power series a_0 + a_1 z + ... + a_M z^M with a_0 = 1.
    """
    __slots__ = ("_coefficients", "_mode")

    def __init__(self, coefficients, mode=globals.EXACT):
        scalars.check_mode(mode)
        coefficients = tuple(scalars.coerce(c, mode) for c in coefficients)
        if not coefficients:
            raise InvalidPowerSeries("a power series needs at least a_0")
        if not scalars.is_zero(coefficients[0] - scalars.one(mode)):
            raise InvalidPowerSeries("a_0 must be 1. Got {:s}".format(str(coefficients[0])))
        self._coefficients = coefficients
        self._mode = mode

    @classmethod
    def exp_of(cls, coefficients, mode=globals.EXACT):
        """
            exp(p_1 z + ... + p_M z^M), truncated at z^M.
        """
        p = [scalars.zero(mode)] + [scalars.coerce(c, mode) for c in coefficients]
        order = len(p) - 1
        result = [scalars.one(mode)] + [scalars.zero(mode)] * order
        power = [scalars.one(mode)] + [scalars.zero(mode)] * order
        for j in range(1, order + 1):
            power = _series_mul(power, p, order, mode)
            weight = scalars.factorial_inverse(j, mode)
            result = [r + c * weight for (r, c) in zip(result, power)]
        return cls(result, mode)

    @property
    def order(self):
        return len(self._coefficients) - 1

    @property
    def mode(self):
        return self._mode

    @property
    def coefficients(self):
        return self._coefficients

    def __getitem__(self, n):
        return self._coefficients[n]

    def __len__(self):
        return len(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesCoeffs):
            return NotImplemented
        return self._mode == other._mode and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self._mode, self._coefficients))

    def __repr__(self):
        return "PowerSeriesCoeffs({:s})".format(", ".join(str(c) for c in self._coefficients))


def _series_mul(a, b, order, mode):
    product = [scalars.zero(mode)] * (order + 1)
    for (i, a_i) in enumerate(a):
        if scalars.is_zero(a_i):
            continue
        for j in range(0, order - i + 1):
            product[i + j] = product[i + j] + a_i * b[j]
    return product


def power_polynomials(a):
    """
        a_0(t), ..., a_M(t): the coefficients of A(z)^t as polynomials in t.

        A^t = sum_j C(t, j) (A - 1)^j and (A - 1)^j starts at z^j, so j <= M suffices.
    """
    assert isinstance(a, PowerSeriesCoeffs), "a expected to be PowerSeriesCoeffs. Got {:s}".format(repr(a))
    mode = a.mode
    order = a.order
    shifted = [scalars.zero(mode)] + list(a.coefficients[1:])
    polys = [UniPoly.constant(1, mode)] + [UniPoly.zero(mode)] * order
    power = [scalars.one(mode)] + [scalars.zero(mode)] * order
    for j in range(1, order + 1):
        power = _series_mul(power, shifted, order, mode)
        binomial = binomial_poly(j, mode)
        for n in range(j, order + 1):
            if not scalars.is_zero(power[n]):
                polys[n] = polys[n] + binomial * power[n]
    return polys


def classical_oracle(a, w, x, order=None):
    """
        Coefficients b_0(x), ..., b_M(x) of B(z)^x where A(z B(z)^w) = B(z).

        w and x are scalars of the series mode; exact mode accepts indeterminates.
    """
    assert isinstance(a, PowerSeriesCoeffs), "a expected to be PowerSeriesCoeffs. Got {:s}".format(repr(a))
    if order is not None:
        assert isinstance(order, int) and 0 <= order <= a.order, \
            "order expected in 0..{:d}. Got {:s}".format(a.order, repr(order))
        a = PowerSeriesCoeffs(a.coefficients[:order + 1], a.mode)
    mode = a.mode
    w = scalars.coerce(w, mode)
    x = scalars.coerce(x, mode)
    polys = power_polynomials(a)
    b = [scalars.one(mode)]
    for n in range(1, a.order + 1):
        b.append(x * polys[n].divide_by_x().evaluate(x + w * n))
    return PowerSeriesCoeffs(b, mode)


def _powers_of_two_series(f2):
    """
        p_k = c_{2^k} for 1 <= k <= floor(log2 N); raises on any other nonzero coefficient.
    """
    for n in f2.support():
        if n & (n - 1):
            raise SupportViolation(n)
    return [f2[2 ** k] for k in range(1, arith.floor_log2(f2.order) + 1)]


def _as_v(value):
    return value.contract(("w", "L2"), "v")


def bridge(f2, method=TRIANGULAR):
    """
        Compares the Dirichlet solution for f2 supported on powers of 2 with classical inversion.

        The Dirichlet side solves with w an indeterminate, so w ln 2 appears as w*L2 and is
        contracted into v. Checks:
          hat_coefficients  g_{2^n} = hat(a_n)(n v)
          power_x           [exp(x g)]_{2^n} = b_n(x), x and v indeterminates
          support           g vanishes off the powers of 2
        power_x details carry b_n at x = v = 1 from both sides.

        :return: list of CheckResult
    """
    assert isinstance(f2, DirichletSeries), "f2 expected to be DirichletSeries. Got {:s}".format(repr(f2))
    assert f2.mode == globals.EXACT, "the bridge compares exact polynomials"
    p = _powers_of_two_series(f2)
    levels = len(p)

    a = PowerSeriesCoeffs.exp_of(p)
    polys = power_polynomials(a)
    v = SymbolicScalar.symbol("v")
    x = SymbolicScalar.symbol("x")
    b = classical_oracle(a, v, x)

    g = solve(f2, SymbolicScalar.symbol("w"), method, check_residual=False).g
    power = dexp(g.scale(x))
    checks = []

    hat_failure = None
    for n in range(1, levels + 1):
        dirichlet = _as_v(g[2 ** n])
        classical = polys[n].divide_by_x().evaluate(v * n)
        if dirichlet != classical:
            hat_failure = CheckResult.failure("hat_coefficients", 2 ** n, dirichlet, classical)
            break
    checks.append(CheckResult.success("hat_coefficients") if hat_failure is None else hat_failure)

    unit = {"x": 1, "v": 1}
    at_unit = {}
    power_failure = None
    for n in range(0, levels + 1):
        dirichlet = _as_v(power[2 ** n])
        if dirichlet != b[n]:
            power_failure = CheckResult.failure("power_x", 2 ** n, dirichlet, b[n])
            break
        at_unit[str(n)] = [str(dirichlet.substitute(unit)), str(b[n].substitute(unit))]
    checks.append(CheckResult.success("power_x", at_unit=at_unit) if power_failure is None else power_failure)

    stray = [n for n in g.support() if n & (n - 1)]
    if stray:
        checks.append(CheckResult.failure("support", stray[0], g[stray[0]], 0))
    else:
        checks.append(CheckResult.success("support"))

    _log.debug("Bridge over {:d} powers of 2: {:s}".format(levels, str([c.passed for c in checks])))
    return checks
