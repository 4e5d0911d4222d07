"""
    Exact rational scalars.

    Rationals are plain `fractions.Fraction` values, which already keep the reduced
    form with a positive denominator. This module only fixes the text format used by
    the series specifications and reports: "p/q", with "/q" omitted when q is 1.
"""

import re
from fractions import Fraction

from dirlag.polyalg.exceptions import InvalidRational

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_rational_string(text):
    return isinstance(text, str) and _RATIONAL_PATTERN.match(text) is not None


def parse_rational(text):
    if isinstance(text, bool):
        raise InvalidRational(text)
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise InvalidRational(text)
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise InvalidRational(text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InvalidRational(text)
    return Fraction(numerator, denominator)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return "{:d}".format(value.numerator)
    return "{:d}/{:d}".format(value.numerator, value.denominator)
