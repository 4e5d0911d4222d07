"""
    Dense univariate polynomials in x.

    Degrees stay tiny here (a Dirichlet convolution polynomial alpha_n has degree at most
    Omega(n) <= log2 N), so the coefficient list is dense, lowest power first. Coefficients
    live in the scalar ring of the polynomial mode: SymbolicScalar (exact) or complex
    (numeric).
"""

import math
from fractions import Fraction
from functools import lru_cache

from dirlag import globals
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar


class UniPoly(object):
    __slots__ = ("_coefficients", "_mode")

    def __init__(self, coefficients, mode=globals.EXACT):
        scalars.check_mode(mode)
        coefficients = [scalars.coerce(c, mode) for c in coefficients]
        while coefficients and scalars.is_zero(coefficients[-1]):
            coefficients.pop()
        self._coefficients = tuple(coefficients)
        self._mode = mode

    @classmethod
    def zero(cls, mode=globals.EXACT):
        return cls((), mode)

    @classmethod
    def constant(cls, value, mode=globals.EXACT):
        return cls((value,), mode)

    @classmethod
    def x(cls, mode=globals.EXACT):
        return cls((0, 1), mode)

    @classmethod
    def from_scalar(cls, value, variable="x"):
        """
            Reads an exact scalar as a polynomial in `variable`.
        """
        value = SymbolicScalar.coerce(value)
        collected = value.coefficients_in(variable)
        if not collected:
            return cls.zero(globals.EXACT)
        top = max(collected)
        return cls([collected.get(k, 0) for k in range(top + 1)], globals.EXACT)

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def mode(self):
        return self._mode

    @property
    def degree(self):
        return len(self._coefficients) - 1

    def coefficient(self, k):
        assert isinstance(k, int) and k >= 0, "k expected to be a non negative int. Got {:s}".format(repr(k))
        if k < len(self._coefficients):
            return self._coefficients[k]
        return scalars.zero(self._mode)

    @property
    def constant_term(self):
        return self.coefficient(0)

    def is_zero(self):
        return not self._coefficients

    def __repr__(self):
        return "UniPoly({:s})".format(str(self))

    def __str__(self):
        if self._mode == globals.EXACT:
            return str(self.to_scalar("x"))
        if not self._coefficients:
            return "0"
        return " + ".join(
            "({:.17g}{:+.17g}j)*x^{:d}".format(c.real, c.imag, k) for (k, c) in enumerate(self._coefficients)
            if c != 0
        )

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._mode == other._mode and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self._mode, self._coefficients))

    def is_close(self, other, tolerance=None):
        assert isinstance(other, UniPoly), "other expected to be UniPoly. Got {:s}".format(repr(other))
        if self._mode == globals.EXACT and other._mode == globals.EXACT:
            return self == other
        size = max(len(self._coefficients), len(other._coefficients))
        return all(
            scalars.close(self.coefficient(k), other.coefficient(k), tolerance) for k in range(size)
        )

    def _check_same_mode(self, other):
        assert self._mode == other._mode, "polynomial modes differ: {:s} and {:s}".format(self._mode, other._mode)

    def __neg__(self):
        return UniPoly([-c for c in self._coefficients], self._mode)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other, self._mode)
        self._check_same_mode(other)
        size = max(len(self._coefficients), len(other._coefficients))
        return UniPoly([self.coefficient(k) + other.coefficient(k) for k in range(size)], self._mode)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.constant(other, self._mode)
        return self.__add__(-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            factor = scalars.coerce(other, self._mode)
            return UniPoly([c * factor for c in self._coefficients], self._mode)
        self._check_same_mode(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self._mode)
        product = [scalars.zero(self._mode)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for (i, a) in enumerate(self._coefficients):
            if scalars.is_zero(a):
                continue
            for (j, b) in enumerate(other._coefficients):
                product[i + j] = product[i + j] + a * b
        return UniPoly(product, self._mode)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return UniPoly([c / other for c in self._coefficients], self._mode)

    def evaluate(self, point):
        """
            Horner evaluation at a scalar of the polynomial ring.
        """
        point = scalars.coerce(point, self._mode)
        result = scalars.zero(self._mode)
        for c in reversed(self._coefficients):
            result = result * point + c
        return result

    def scale_variable(self, factor):
        """
            Returns q with q(x) = p(factor * x).
        """
        factor = scalars.coerce(factor, self._mode)
        power = scalars.one(self._mode)
        scaled = []
        for c in self._coefficients:
            scaled.append(c * power)
            power = power * factor
        return UniPoly(scaled, self._mode)

    def multiply_by_x(self):
        if self.is_zero():
            return self
        return UniPoly((scalars.zero(self._mode),) + self._coefficients, self._mode)

    def divide_by_x(self):
        """
            Quotient of the division by x; the constant term is dropped.
        """
        return UniPoly(self._coefficients[1:], self._mode)

    def to_scalar(self, variable="x"):
        assert self._mode == globals.EXACT, "only exact polynomials convert to SymbolicScalar"
        symbol = SymbolicScalar.symbol(variable)
        result = SymbolicScalar.constant(0)
        for c in reversed(self._coefficients):
            result = result * symbol + c
        return result

    def to_numeric(self):
        if self._mode == globals.NUMERIC:
            return self
        return UniPoly([scalars.coerce(c, globals.NUMERIC) for c in self._coefficients], globals.NUMERIC)


@lru_cache(maxsize=None)
def _binomial_poly(k, mode):
    result = UniPoly.constant(1, mode)
    for i in range(k):
        result = result * UniPoly((-i, 1), mode)
    return result * scalars.factorial_inverse(k, mode)


def binomial_poly(k, mode=globals.EXACT):
    """
        C(x, k) = x(x-1)...(x-k+1)/k! as a degree k polynomial.
    """
    assert isinstance(k, int) and k >= 0, "k expected to be a non negative int. Got {:s}".format(repr(k))
    return _binomial_poly(k, mode)


def poly_shift(p, a):
    """
        Returns q with q(x) = p(x + a), by binomial re-expansion of every power of (x + a).
    """
    assert isinstance(p, UniPoly), "p expected to be UniPoly. Got {:s}".format(repr(p))
    a = scalars.coerce(a, p.mode)
    degree = p.degree
    if degree <= 0:
        return p
    powers = [scalars.one(p.mode)]
    for _ in range(degree):
        powers.append(powers[-1] * a)
    shifted = []
    for j in range(degree + 1):
        total = scalars.zero(p.mode)
        for k in range(j, degree + 1):
            c = p.coefficients[k]
            if scalars.is_zero(c):
                continue
            total = total + c * powers[k - j] * math.comb(k, j)
        shifted.append(total)
    return UniPoly(shifted, p.mode)


def poly_integrate(p):
    """
        Returns the integral of p from 0 to x.
    """
    assert isinstance(p, UniPoly), "p expected to be UniPoly. Got {:s}".format(repr(p))
    if p.mode == globals.EXACT:
        return UniPoly([0] + [c * Fraction(1, k + 1) for (k, c) in enumerate(p.coefficients)], p.mode)
    return UniPoly([0] + [c / (k + 1) for (k, c) in enumerate(p.coefficients)], p.mode)
