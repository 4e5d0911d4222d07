"""
    Dirichlet series with nonnegative coefficients and a known abscissa of absolute convergence.

    Every descriptor is c_1 = 0, c_n = n^{-a} (ln n)^{-b} for n >= 2. Its abscissa is 1 - a,
    and the d-th derivative converges at the abscissa itself exactly when b - d > 1.
"""

import math
from fractions import Fraction

from dirlag import globals
from dirlag.dseries.series import DirichletSeries


class AnalyticDescriptor(object):
    __slots__ = ("_name", "_a", "_b")

    def __init__(self, name, a, b=0.0):
        assert isinstance(name, str), "name expected to be str. Got {:s}".format(repr(name))
        assert isinstance(a, (int, float, Fraction)) and not isinstance(a, bool), \
            "a expected to be a real number. Got {:s}".format(repr(a))
        assert isinstance(b, (int, float, Fraction)) and not isinstance(b, bool), \
            "b expected to be a real number. Got {:s}".format(repr(b))
        self._name = name
        self._a = a
        self._b = b

    @property
    def name(self):
        return self._name

    @property
    def a(self):
        return float(self._a)

    @property
    def b(self):
        return float(self._b)

    @property
    def sigma_f(self):
        return 1.0 - float(self._a)

    def coefficient(self, n):
        assert isinstance(n, int) and n >= 1, "n expected to be a positive int. Got {:s}".format(repr(n))
        if n == 1:
            return 0.0
        return n ** (-self.a) * math.log(n) ** (-self.b)

    def converges_at_boundary(self, derivative=0):
        return self.b - derivative > 1.0

    def to_series(self, order, mode=globals.NUMERIC):
        """
            First `order` coefficients as a DirichletSeries. Exact mode needs integer a and b = 0.
        """
        if mode == globals.EXACT:
            assert self._b == 0 and Fraction(self._a).denominator == 1, \
                "{:s} has irrational coefficients".format(self._name)
            exponent = int(self._a)
            return DirichletSeries([0] + [Fraction(n) ** (-exponent) for n in range(2, order + 1)], mode)
        return DirichletSeries([self.coefficient(n) for n in range(1, order + 1)], mode)

    def to_dict(self):
        return {"name": self._name, "a": self.a, "b": self.b, "sigma_f": self.sigma_f}

    def __repr__(self):
        return "<AnalyticDescriptor {:s} a={:g} b={:g}>".format(self._name, self.a, self.b)

    def __eq__(self, other):
        if not isinstance(other, AnalyticDescriptor):
            return NotImplemented
        return (self._name, self.a, self.b) == (other._name, other.a, other.b)

    def __hash__(self):
        return hash((self._name, self.a, self.b))


def zeta_shift(k):
    """
        f(s) = zeta(s + k) - 1, abscissa 1 - k.
    """
    return AnalyticDescriptor("zeta_shift({:g})".format(k), k, 0)


def log_weighted(a, b):
    """
        c_n = n^{-a} (ln n)^{-b}, abscissa 1 - a.
    """
    return AnalyticDescriptor("log_weighted({:g},{:g})".format(a, b), a, b)


BUILTIN_DESCRIPTORS = {
    "zeta_shift": zeta_shift,
    "log_weighted": log_weighted,
}


def descriptor(name, *parameters):
    assert name in BUILTIN_DESCRIPTORS, "descriptor expected to be one of {:s}. Got {:s}".format(
        str(tuple(BUILTIN_DESCRIPTORS)), repr(name)
    )
    return BUILTIN_DESCRIPTORS[name](*parameters)
