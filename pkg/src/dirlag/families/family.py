from dirlag import globals
from dirlag.polyalg import scalars
from dirlag.polyalg.unipoly import UniPoly
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.dseries.series import DirichletSeries


class ConvolutionFamily(object):
    """
        Polynomials alpha_1..alpha_N in x with alpha_1 = 1.

        The remaining structural invariants (degree bound, alpha_n(0) = 0, the convolution
        identity) are what verify_family checks, so a family built by hand or corrupted on
        purpose is still representable.
    """
    __slots__ = ("_polys", "_mode")

    def __init__(self, polys, mode=globals.EXACT):
        scalars.check_mode(mode)
        polys = tuple(polys)
        assert len(polys) >= 1, "a family needs at least alpha_1"
        for p in polys:
            assert isinstance(p, UniPoly), "UniPoly expected. Got {:s}".format(repr(p))
            assert p.mode == mode, "polynomial mode {:s} differs from family mode {:s}".format(p.mode, mode)
        assert polys[0] == UniPoly.constant(1, mode), "alpha_1 expected to be 1. Got {:s}".format(str(polys[0]))
        self._polys = polys
        self._mode = mode

    @classmethod
    def trivial(cls, order, mode=globals.EXACT):
        return cls([UniPoly.constant(1, mode)] + [UniPoly.zero(mode)] * (order - 1), mode)

    @property
    def order(self):
        return len(self._polys)

    @property
    def mode(self):
        return self._mode

    @property
    def polys(self):
        return self._polys

    def __len__(self):
        return len(self._polys)

    def __getitem__(self, n):
        assert isinstance(n, int) and 1 <= n <= len(self._polys), \
            "index expected in 1..{:d}. Got {:s}".format(len(self._polys), repr(n))
        return self._polys[n - 1]

    def items(self):
        return enumerate(self._polys, start=1)

    def hat(self, n):
        """
            alpha_n(x) / x, for n >= 2.
        """
        assert isinstance(n, int) and n >= 2, "the hat operation is defined for n >= 2. Got {:s}".format(repr(n))
        return self[n].divide_by_x()

    def generating_series(self):
        """
            The series f with exp(x f) = sum alpha_n(x) n^{-s}; its coefficients are hat(n)(0).
        """
        return DirichletSeries(
            [scalars.zero(self._mode)] + [self[n].coefficient(1) for n in range(2, self.order + 1)], self._mode
        )

    def values_at(self, point):
        """
            :return: list [alpha_1(point), ..., alpha_N(point)]
        """
        return [p.evaluate(point) for p in self._polys]

    def with_poly(self, n, poly):
        assert isinstance(n, int) and 2 <= n <= self.order, \
            "index expected in 2..{:d}. Got {:s}".format(self.order, repr(n))
        polys = list(self._polys)
        polys[n - 1] = poly
        return ConvolutionFamily(polys, self._mode)

    def to_series(self, x=None):
        """
            sum alpha_n(x) n^{-s}; exact families keep x as an indeterminate unless a value is given.
        """
        if x is None:
            assert self._mode == globals.EXACT, "numeric families need a value for x"
            x = SymbolicScalar.symbol("x")
        return DirichletSeries(self.values_at(x), self._mode)

    def truncate(self, order):
        assert isinstance(order, int) and 1 <= order <= self.order, \
            "order expected in 1..{:d}. Got {:s}".format(self.order, repr(order))
        return ConvolutionFamily(self._polys[:order], self._mode)

    def serialize(self):
        return [(n, str(p)) for (n, p) in self.items()]

    def summary(self):
        return "<ConvolutionFamily order={:d} mode={:s} max_degree={:d}>".format(
            self.order, self._mode, max(p.degree for p in self._polys)
        )

    def __repr__(self):
        return self.summary()

    def __str__(self):
        return "\n".join("{:d}: {:s}".format(n, s) for (n, s) in self.serialize())

    def __eq__(self, other):
        if not isinstance(other, ConvolutionFamily):
            return NotImplemented
        return self._mode == other._mode and self._polys == other._polys

    def __hash__(self):
        return hash((self._mode, self._polys))

    def first_difference(self, other, tolerance=None):
        assert isinstance(other, ConvolutionFamily), "ConvolutionFamily expected. Got {:s}".format(repr(other))
        assert self.order == other.order, "family orders differ: {:d} and {:d}".format(self.order, other.order)
        for (n, (a, b)) in enumerate(zip(self._polys, other._polys), start=1):
            if not a.is_close(b, tolerance):
                return n
        return None

    def is_close(self, other, tolerance=None):
        return self.first_difference(other, tolerance) is None
