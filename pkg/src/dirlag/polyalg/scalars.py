"""
    Scalar rings used by the series and polynomial code.

    exact   -> SymbolicScalar (rationals embed as constants)
    numeric -> Python complex (binary64 real and imaginary parts)
"""

import math
from fractions import Fraction
from numbers import Number

from dirlag import globals
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.exceptions import InexactOperation


def check_mode(mode):
    assert mode in globals.MODES, "mode expected to be one of {:s}. Got {:s}".format(
        str(globals.MODES), repr(mode)
    )


def zero(mode):
    check_mode(mode)
    return SymbolicScalar.constant(0) if mode == globals.EXACT else 0j


def one(mode):
    check_mode(mode)
    return SymbolicScalar.constant(1) if mode == globals.EXACT else 1 + 0j


def coerce(value, mode):
    check_mode(mode)
    if mode == globals.EXACT:
        if isinstance(value, str):
            from dirlag.polyalg.rational import parse_rational
            value = parse_rational(value)
        return SymbolicScalar.coerce(value)

    if isinstance(value, SymbolicScalar):
        from dirlag.polyalg.evaluation import eval_numeric
        return eval_numeric(value)
    if isinstance(value, str):
        return complex(value.replace(" ", ""))
    if isinstance(value, bool) or not isinstance(value, Number):
        raise TypeError("cannot use {:s} as a numeric scalar".format(repr(value)))
    return complex(value)


def is_zero(value):
    if isinstance(value, SymbolicScalar):
        return value.is_zero()
    return value == 0


def magnitude(value):
    if isinstance(value, SymbolicScalar):
        from dirlag.polyalg.evaluation import eval_numeric
        return abs(eval_numeric(value))
    return abs(value)


def close(first, second, tolerance=None):
    """
        Exact equality for SymbolicScalar, relative closeness for floating point values.
    """
    if isinstance(first, SymbolicScalar) or isinstance(second, SymbolicScalar):
        return first == second
    if tolerance is None:
        tolerance = globals.NUMERIC_TOLERANCE
    return abs(first - second) <= tolerance * max(1.0, abs(first), abs(second))


def factorial_inverse(k, mode):
    if mode == globals.EXACT:
        return Fraction(1, math.factorial(k))
    return 1.0 / math.factorial(k)


def rational_value(value):
    """
        Returns the Fraction held by a constant exact scalar.
    """
    if isinstance(value, SymbolicScalar):
        if not value.is_constant():
            raise InexactOperation("{:s} is not a rational constant".format(str(value)))
        return value.constant_value()
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise InexactOperation("{:s} is not a rational constant".format(repr(value)))
