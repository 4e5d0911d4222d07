from numbers import Real

from dirlag import globals
from dirlag.polyalg.rational import is_rational_string


def is_positive_int(value):
    return isinstance(value, int) and \
           not isinstance(value, bool) and \
           value >= 1


def is_index_key(key, order):
    return isinstance(key, str) and \
           key.isdigit() and \
           1 <= int(key) <= order


def is_exact_coefficient(value):
    return isinstance(value, str) and is_rational_string(value)


def is_numeric_coefficient(value):
    if isinstance(value, bool):
        return False
    if isinstance(value, Real):
        return True
    if isinstance(value, str):
        try:
            complex(value.replace(" ", ""))
            return True
        except ValueError:
            return False
    return False


def is_coefficient(value, mode):
    if mode == globals.EXACT:
        return is_exact_coefficient(value)
    return is_numeric_coefficient(value)


def is_parameter_value(value):
    return value is None or \
           isinstance(value, (bool, int, float, str))


def is_probability(value):
    return isinstance(value, Real) and \
           not isinstance(value, bool) and \
           0.0 <= value <= 1.0
