"""
    Truncated Dirichlet series.

    A DirichletSeries of order N holds c_1..c_N and stands for the full series modulo
    every term m^{-s} with m > N. Coefficients live in the scalar ring of the series mode.
"""

from dirlag import globals
from dirlag.polyalg import scalars
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.dseries.exceptions import OrderMismatch, ModeMismatch


class DirichletSeries(object):
    __slots__ = ("_coefficients", "_mode")

    def __init__(self, coefficients, mode=globals.EXACT):
        scalars.check_mode(mode)
        coefficients = tuple(scalars.coerce(c, mode) for c in coefficients)
        assert len(coefficients) >= 1, "a Dirichlet series needs at least the coefficient c_1"
        self._coefficients = coefficients
        self._mode = mode

    @classmethod
    def zero(cls, order, mode=globals.EXACT):
        assert isinstance(order, int) and order >= 1, "order expected to be a positive int. Got {:s}".format(
            repr(order)
        )
        return cls([0] * order, mode)

    @classmethod
    def identity(cls, order, mode=globals.EXACT):
        """
            The convolution unit epsilon (c_1 = 1, every other coefficient 0).
        """
        return cls.from_dict(order, {1: 1}, mode)

    @classmethod
    def from_dict(cls, order, mapping, mode=globals.EXACT):
        assert isinstance(order, int) and order >= 1, "order expected to be a positive int. Got {:s}".format(
            repr(order)
        )
        assert isinstance(mapping, dict), "mapping expected to be dict. Got {:s}".format(repr(mapping))
        coefficients = [0] * order
        for (n, value) in mapping.items():
            assert isinstance(n, int) and 1 <= n, "series index expected to be a positive int. Got {:s}".format(
                repr(n)
            )
            if n <= order:
                coefficients[n - 1] = value
        return cls(coefficients, mode)

    @property
    def order(self):
        return len(self._coefficients)

    @property
    def mode(self):
        return self._mode

    @property
    def coefficients(self):
        return self._coefficients

    def __len__(self):
        return len(self._coefficients)

    def __getitem__(self, n):
        assert isinstance(n, int) and 1 <= n <= len(self._coefficients), \
            "index expected in 1..{:d}. Got {:s}".format(len(self._coefficients), repr(n))
        return self._coefficients[n - 1]

    def __iter__(self):
        return iter(self._coefficients)

    def items(self):
        return ((n, c) for (n, c) in enumerate(self._coefficients, start=1))

    def support(self):
        return tuple(n for (n, c) in self.items() if not scalars.is_zero(c))

    def in_d0(self):
        return scalars.is_zero(self._coefficients[0])

    def is_unit(self):
        return scalars.is_zero(self._coefficients[0] - scalars.one(self._mode))

    def is_zero(self):
        return all(scalars.is_zero(c) for c in self._coefficients)

    def summary(self):
        return "<DirichletSeries order={:d} mode={:s} support={:s}>".format(
            self.order, self._mode, str(self.support()[:12])
        )

    def __repr__(self):
        return self.summary()

    def __str__(self):
        terms = ["{:d}: {:s}".format(n, str(c)) for (n, c) in self.items() if not scalars.is_zero(c)]
        return "{" + ", ".join(terms) + "}"

    def __eq__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self._mode == other._mode and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self._mode, self._coefficients))

    def check_compatible(self, other):
        assert isinstance(other, DirichletSeries), "DirichletSeries expected. Got {:s}".format(repr(other))
        if self.order != other.order:
            raise OrderMismatch(self.order, other.order)
        if self._mode != other._mode:
            raise ModeMismatch(self._mode, other._mode)

    def __neg__(self):
        return DirichletSeries([-c for c in self._coefficients], self._mode)

    def __add__(self, other):
        self.check_compatible(other)
        return DirichletSeries([a + b for (a, b) in zip(self._coefficients, other._coefficients)], self._mode)

    def __sub__(self, other):
        self.check_compatible(other)
        return DirichletSeries([a - b for (a, b) in zip(self._coefficients, other._coefficients)], self._mode)

    def scale(self, factor):
        factor = scalars.coerce(factor, self._mode)
        return DirichletSeries([c * factor for c in self._coefficients], self._mode)

    def __mul__(self, other):
        if isinstance(other, DirichletSeries):
            from dirlag.dseries.operations import dmul
            return dmul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map(self, function):
        """
            Applies function(n, c_n) to every coefficient.
        """
        return DirichletSeries([function(n, c) for (n, c) in self.items()], self._mode)

    def truncate(self, order):
        assert isinstance(order, int) and 1 <= order <= self.order, \
            "order expected in 1..{:d}. Got {:s}".format(self.order, repr(order))
        return DirichletSeries(self._coefficients[:order], self._mode)

    def extend(self, order):
        """
            Same coefficients, zero padded up to `order`.
        """
        assert isinstance(order, int) and order >= self.order, \
            "order expected to be >= {:d}. Got {:s}".format(self.order, repr(order))
        return DirichletSeries(
            self._coefficients + (scalars.zero(self._mode),) * (order - self.order), self._mode
        )

    def to_numeric(self, assignment=None):
        if self._mode == globals.NUMERIC:
            return self
        from dirlag.polyalg.evaluation import eval_numeric
        return DirichletSeries([eval_numeric(c, assignment) for c in self._coefficients], globals.NUMERIC)

    def max_norm(self):
        return max(scalars.magnitude(c) for c in self._coefficients)

    def first_difference(self, other, tolerance=None):
        """
            :return: first index n where the coefficients differ (beyond tolerance in numeric mode) or None
        """
        self.check_compatible(other)
        for (n, (a, b)) in enumerate(zip(self._coefficients, other._coefficients), start=1):
            if not scalars.close(a, b, tolerance):
                return n
        return None

    def is_close(self, other, tolerance=None):
        return self.first_difference(other, tolerance) is None

    def is_nonnegative(self, tolerance=0.0):
        """
            Real nonnegative coefficients (numeric) or polynomials with nonnegative rational
            coefficients (exact).
        """
        for c in self._coefficients:
            if isinstance(c, SymbolicScalar):
                if not c.is_nonnegative():
                    return False
            elif c.real < -tolerance or abs(c.imag) > tolerance:
                return False
        return True
