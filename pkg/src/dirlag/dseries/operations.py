"""
    Arithmetic of truncated Dirichlet series.

    exp, log and pow are power sums cut at floor(log2 N): a series h in D_0 has h^j
    supported on n >= 2^j, so every later power vanishes below the truncation order.
    None of them divides by ln(n), which keeps exact mode inside Q[x, y, w, L_2, ...].
"""

import cmath
import logging
import math
from fractions import Fraction

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import binomial_poly
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.exceptions import NotInD0, NotUnit, InexactShift

_log = logging.getLogger(logger_module_name(__file__))


def _require_d0(*series):
    for s in series:
        assert isinstance(s, DirichletSeries), "DirichletSeries expected. Got {:s}".format(repr(s))
        if not s.in_d0():
            raise NotInD0(s[1])


def _require_unit(u):
    assert isinstance(u, DirichletSeries), "DirichletSeries expected. Got {:s}".format(repr(u))
    if not u.is_unit():
        raise NotUnit(u[1])


def dmul(a, b):
    """
        Dirichlet convolution: c_n = sum over d | n of a_d * b_{n/d}.
    """
    assert isinstance(a, DirichletSeries), "a expected to be DirichletSeries. Got {:s}".format(repr(a))
    a.check_compatible(b)
    order = a.order
    mode = a.mode
    zero = scalars.zero(mode)
    out = [zero] * order
    a_coefficients = a.coefficients
    b_coefficients = b.coefficients
    b_support = [m for m in range(1, order + 1) if not scalars.is_zero(b_coefficients[m - 1])]
    for d in range(1, order + 1):
        a_d = a_coefficients[d - 1]
        if scalars.is_zero(a_d):
            continue
        limit = order // d
        for m in b_support:
            if m > limit:
                break
            out[d * m - 1] = out[d * m - 1] + a_d * b_coefficients[m - 1]
    return DirichletSeries(out, mode)


def dpowers(h, count=None):
    """
        :return: list [h, h^2, ..., h^count]; count defaults to floor(log2 N)
    """
    _require_d0(h)
    if count is None:
        count = arith.floor_log2(h.order)
    powers = []
    current = None
    for _ in range(count):
        current = h if current is None else dmul(current, h)
        powers.append(current)
    return powers


def dexp(h):
    """
        exp(h) = sum_{j <= floor(log2 N)} h^j / j!, for h in D_0.
    """
    _require_d0(h)
    result = DirichletSeries.identity(h.order, h.mode)
    for (j, power) in enumerate(dpowers(h), start=1):
        result = result + power.scale(scalars.factorial_inverse(j, h.mode))
    return result


def dlog(u):
    """
        log(u) = sum_{j <= floor(log2 N)} (-1)^(j+1) (u - epsilon)^j / j, for a unit u.
    """
    _require_unit(u)
    t = u - DirichletSeries.identity(u.order, u.mode)
    result = DirichletSeries.zero(u.order, u.mode)
    for (j, power) in enumerate(dpowers(t), start=1):
        weight = Fraction((-1) ** (j + 1), j) if u.mode == globals.EXACT else (-1) ** (j + 1) / j
        result = result + power.scale(weight)
    return result


def dpow(u, t):
    """
        u^t = sum_{j <= floor(log2 N)} C(t, j) (u - epsilon)^j, for a unit u.

        t may be a rational, a SymbolicScalar (e.g. the indeterminate x, giving coefficient
        polynomials in x) or a complex number in numeric mode.
    """
    _require_unit(u)
    t = scalars.coerce(t, u.mode)
    h = u - DirichletSeries.identity(u.order, u.mode)
    result = DirichletSeries.identity(u.order, u.mode)
    for (j, power) in enumerate(dpowers(h), start=1):
        result = result + power.scale(binomial_poly(j, u.mode).evaluate(t))
    return result


def dderiv(f):
    """
        d/ds: c_n -> -ln(n) c_n, with ln(n) expanded into log symbols in exact mode.
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    return f.map(lambda n, c: -(c * arith.log_value(n, f.mode)) if n > 1 else scalars.zero(f.mode))


def _integer_shift(a):
    if isinstance(a, SymbolicScalar):
        if not a.is_constant():
            raise InexactShift(a)
        a = a.constant_value()
    if isinstance(a, float) and a.is_integer():
        return int(a)
    if isinstance(a, (int, Fraction)) and not isinstance(a, bool) and Fraction(a).denominator == 1:
        return int(a)
    raise InexactShift(a)


def dshift(f, a):
    """
        Vertical shift f(s - a): c_n -> c_n n^a.
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    if f.mode == globals.EXACT:
        a = _integer_shift(a)
        return f.map(lambda n, c: c * (Fraction(n) ** a))
    a = scalars.coerce(a, globals.NUMERIC)
    return f.map(lambda n, c: c * cmath.exp(a * math.log(n)))


def compose_inner(f, g, w):
    """
        Truncation of f(s - w g(s)) for f, g in D_0.

        f(s - w g(s)) = sum_k c_k k^{-s} exp(w ln(k) g(s)); the k^{-s} prefactor moves the
        coefficient of exp(w ln(k) g) at m to index k*m, so E_k is only needed up to N // k.
    """
    assert isinstance(f, DirichletSeries), "f expected to be DirichletSeries. Got {:s}".format(repr(f))
    f.check_compatible(g)
    _require_d0(f, g)
    mode = f.mode
    w = scalars.coerce(w, mode)
    order = f.order
    out = [scalars.zero(mode)] * order
    for k in f.support():
        c_k = f[k]
        window = order // k
        if window == 1:
            out[k - 1] = out[k - 1] + c_k
            continue
        exponential = dexp(g.truncate(window).scale(w * arith.log_value(k, mode)))
        for (m, e_m) in exponential.items():
            if not scalars.is_zero(e_m):
                out[k * m - 1] = out[k * m - 1] + c_k * e_m
    return DirichletSeries(out, mode)


def graded_exp_step(n, h_coefficient, exp_coefficient, mode):
    """
        One step of Omega(n) E_n = sum_{d | n, d >= 2} Omega(d) h_d E_{n/d}.

        n -> Omega(n) c_n is a derivation of the convolution ring (Omega is completely
        additive), so E = exp(h) obeys this recursion; the division is by an integer.
        h_coefficient(d) and exp_coefficient(m) return the already known h_d and E_m.
    """
    total = scalars.zero(mode)
    for d in arith.divisors(n)[1:]:
        h_d = h_coefficient(d)
        if scalars.is_zero(h_d):
            continue
        total = total + h_d * exp_coefficient(n // d) * arith.big_omega(d)
    if mode == globals.EXACT:
        return total * Fraction(1, arith.big_omega(n))
    return total / arith.big_omega(n)


def dexp_graded(h):
    """
        exp(h) through the Omega-graded recursion, in either mode.
    """
    _require_d0(h)
    values = [scalars.one(h.mode)]
    for n in range(2, h.order + 1):
        values.append(graded_exp_step(n, lambda d: h[d], lambda m: values[m - 1], h.mode))
    return DirichletSeries(values, h.mode)


def dexp_log_recursive(h):
    """
        exp(h) through E_n = (1/ln n) sum_{d | n, d >= 2} ln(d) h_d E_{n/d}. Numeric mode only.
    """
    _require_d0(h)
    assert h.mode == globals.NUMERIC, "the logarithmic recursion divides by ln(n) and is numeric only"
    values = [1 + 0j]
    for n in range(2, h.order + 1):
        total = 0j
        for d in arith.divisors(n)[1:]:
            total += math.log(d) * h[d] * values[n // d - 1]
        values.append(total / math.log(n))
    return DirichletSeries(values, globals.NUMERIC)
