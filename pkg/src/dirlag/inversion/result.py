from dirlag import globals
from dirlag.checks import serialize_scalar
from dirlag.polyalg import scalars
from dirlag.dseries.series import DirichletSeries

CLOSED_FORM = "closed_form"
TRIANGULAR = "triangular"
FIXED_POINT = "fixed_point"
METHODS = (CLOSED_FORM, TRIANGULAR, FIXED_POINT)


class InversionResult(object):
    """
        Solution g of f(s - w g(s)) = g(s) together with how it was obtained.

        residual_norm is the max-norm of the residual series in numeric mode; exact mode
        sets residual_zero instead. Both stay None when the residual was not computed.
    """
    __slots__ = ("g", "method", "residual_norm", "residual_zero", "iterations", "iterates")

    def __init__(self, g, method, residual=None, iterations=None, iterates=None):
        assert isinstance(g, DirichletSeries), "g expected to be DirichletSeries. Got {:s}".format(repr(g))
        assert method in METHODS, "method expected to be one of {:s}. Got {:s}".format(str(METHODS), repr(method))
        self.g = g
        self.method = method
        self.iterations = iterations
        self.iterates = tuple(iterates) if iterates is not None else None
        self.residual_norm = None
        self.residual_zero = None
        if residual is not None:
            if residual.mode == globals.EXACT:
                self.residual_zero = residual.is_zero()
            else:
                self.residual_norm = residual.max_norm()

    @property
    def passed(self):
        if self.residual_zero is not None:
            return self.residual_zero
        if self.residual_norm is not None:
            return self.residual_norm <= globals.NUMERIC_TOLERANCE * (1.0 + self.g.max_norm())
        return True

    def summary(self):
        if self.residual_zero is not None:
            residual = "zero" if self.residual_zero else "nonzero"
        else:
            residual = str(self.residual_norm)
        return "<InversionResult method={:s} order={:d} residual={:s}>".format(self.method, self.g.order, residual)

    def __repr__(self):
        return self.summary()

    def to_dict(self):
        result = {
            "method": self.method,
            "order": self.g.order,
            "mode": self.g.mode,
            "coeffs": {
                str(n): serialize_scalar(c) for (n, c) in self.g.items() if not scalars.is_zero(c)
            },
        }
        if self.residual_zero is not None:
            result["residual_zero"] = self.residual_zero
        if self.residual_norm is not None:
            result["residual_norm"] = self.residual_norm
        if self.iterations is not None:
            result["iterations"] = self.iterations
        return result

