"""
    Sparse multivariate polynomials with rational coefficients.

    A SymbolicScalar is an element of Q[x, y, w, v, L_2, L_3, ...]. The log symbols
    L_p are independent indeterminates standing for ln p, so ln n is represented by the
    linear form sum(m_i * L_{p_i}) over the factorisation n = prod(p_i^{m_i}).

    Monomials are tuples of (variable, exponent) pairs, sorted by variable order
    x < y < w < v < t < (other names) < L_2 < L_3 < ...; exponents are positive.
    Terms are kept in a dictionary without zero coefficients and reported in graded
    lexicographic order.
"""

import re
from fractions import Fraction
from numbers import Integral, Rational

from dirlag.polyalg.exceptions import InexactOperation

_BASE_VARIABLES = ("x", "y", "w", "v", "t")
_LOG_SYMBOL = re.compile(r"^L(\d+)$")


def variable_key(name):
    assert isinstance(name, str) and len(name) > 0, "variable name expected to be a non empty str. Got {:s}".format(
        repr(name)
    )
    if name in _BASE_VARIABLES:
        return 0, _BASE_VARIABLES.index(name), ""
    match = _LOG_SYMBOL.match(name)
    if match:
        return 2, int(match.group(1)), ""
    return 1, 0, name


def log_symbol_name(p):
    assert isinstance(p, int) and p >= 2, "p expected to be a prime int. Got {:s}".format(repr(p))
    return "L{:d}".format(p)


def log_symbol_prime(name):
    match = _LOG_SYMBOL.match(name)
    return int(match.group(1)) if match else None


def monomial_key(monomial):
    return (
        sum(exponent for (_, exponent) in monomial),
        tuple((variable_key(variable), -exponent) for (variable, exponent) in monomial)
    )


def _monomial_product(first, second):
    if not first:
        return second
    if not second:
        return first
    exponents = dict(first)
    for (variable, exponent) in second:
        exponents[variable] = exponents.get(variable, 0) + exponent
    return tuple(sorted(exponents.items(), key=lambda item: variable_key(item[0])))


def _as_fraction(value):
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, (float, complex)):
        raise InexactOperation("floating point value {:s} in exact arithmetic".format(repr(value)))
    return None


class SymbolicScalar(object):
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for (monomial, coefficient) in terms.items():
                coefficient = Fraction(coefficient)
                if coefficient != 0:
                    cleaned[tuple(monomial)] = coefficient
        self._terms = cleaned
        self._hash = None

    @classmethod
    def constant(cls, value):
        return cls({(): value})

    @classmethod
    def symbol(cls, name):
        variable_key(name)
        return cls({((name, 1),): 1})

    @classmethod
    def log_prime(cls, p):
        return cls.symbol(log_symbol_name(p))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, SymbolicScalar):
            return value
        fraction = _as_fraction(value)
        if fraction is None:
            raise TypeError("cannot use {:s} as an exact scalar".format(repr(value)))
        return cls.constant(fraction)

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def __repr__(self):
        return "SymbolicScalar({:s})".format(str(self))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (monomial, coefficient) in self.terms():
            if monomial:
                factors = "*".join(
                    variable if exponent == 1 else "{:s}^{:d}".format(variable, exponent)
                    for (variable, exponent) in monomial
                )
                magnitude = abs(coefficient)
                if magnitude == 1:
                    body = factors
                else:
                    body = "{:s}*{:s}".format(_format_fraction(magnitude), factors)
            else:
                magnitude = abs(coefficient)
                body = _format_fraction(magnitude)
            if not pieces:
                pieces.append(body if coefficient > 0 else "-" + body)
            else:
                pieces.append(("+ " if coefficient > 0 else "- ") + body)
        return " ".join(pieces)

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(Fraction(0))
            elif set(self._terms) == {()}:
                # constants compare equal to Fractions and must hash like them
                self._hash = hash(self._terms[()])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, SymbolicScalar):
            return self._terms == other._terms
        try:
            fraction = _as_fraction(other)
        except (TypeError, InexactOperation):
            return NotImplemented
        if fraction is None:
            return NotImplemented
        if fraction == 0:
            return not self._terms
        return self._terms == {(): fraction}

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not monomial for monomial in self._terms)

    def constant_value(self):
        return self._terms.get((), Fraction(0))

    def terms(self):
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]))

    def variables(self):
        found = set()
        for monomial in self._terms:
            for (variable, _) in monomial:
                found.add(variable)
        return tuple(sorted(found, key=variable_key))

    def degree(self, variable=None):
        if not self._terms:
            return -1
        if variable is None:
            return max(sum(exponent for (_, exponent) in monomial) for monomial in self._terms)
        return max(dict(monomial).get(variable, 0) for monomial in self._terms)

    def is_nonnegative(self):
        return all(coefficient >= 0 for coefficient in self._terms.values())

    def __neg__(self):
        return SymbolicScalar._from_clean({monomial: -coefficient for (monomial, coefficient) in self._terms.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = SymbolicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        terms = dict(self._terms)
        for (monomial, coefficient) in other._terms.items():
            total = terms.get(monomial, 0) + coefficient
            if total:
                terms[monomial] = total
            else:
                terms.pop(monomial, None)
        return SymbolicScalar._from_clean(terms)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = SymbolicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        try:
            other = SymbolicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other.__add__(-self)

    def __mul__(self, other):
        if not isinstance(other, SymbolicScalar):
            try:
                fraction = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if fraction is None:
                return NotImplemented
            if fraction == 0 or not self._terms:
                return SymbolicScalar._from_clean({})
            return SymbolicScalar._from_clean(
                {monomial: coefficient * fraction for (monomial, coefficient) in self._terms.items()}
            )
        if not self._terms or not other._terms:
            return SymbolicScalar._from_clean({})
        terms = {}
        for (first_monomial, first_coefficient) in self._terms.items():
            for (second_monomial, second_coefficient) in other._terms.items():
                monomial = _monomial_product(first_monomial, second_monomial)
                terms[monomial] = terms.get(monomial, 0) + first_coefficient * second_coefficient
        return SymbolicScalar({monomial: coefficient for (monomial, coefficient) in terms.items() if coefficient})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SymbolicScalar):
            if not other.is_constant() or other.is_zero():
                raise InexactOperation("division by the non constant {:s}".format(str(other)))
            other = other.constant_value()
        fraction = _as_fraction(other)
        if fraction is None:
            return NotImplemented
        if fraction == 0:
            raise ZeroDivisionError("division of {:s} by zero".format(str(self)))
        return self.__mul__(1 / fraction)

    def __pow__(self, exponent):
        assert isinstance(exponent, int) and exponent >= 0, \
            "exponent expected to be a non negative int. Got {:s}".format(repr(exponent))
        result = SymbolicScalar.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def coefficients_in(self, variable):
        """
            Collects the terms by powers of `variable`.
            :return: dict exponent -> SymbolicScalar free of `variable`
        """
        collected = {}
        for (monomial, coefficient) in self._terms.items():
            exponent = 0
            rest = []
            for (name, power) in monomial:
                if name == variable:
                    exponent = power
                else:
                    rest.append((name, power))
            bucket = collected.setdefault(exponent, {})
            bucket[tuple(rest)] = coefficient
        return {exponent: SymbolicScalar._from_clean(bucket) for (exponent, bucket) in collected.items()}

    def substitute(self, mapping):
        """
            Replaces variables by exact scalars (rationals or SymbolicScalars).
        """
        assert isinstance(mapping, dict), "mapping expected to be dict. Got {:s}".format(repr(mapping))
        replacements = {name: SymbolicScalar.coerce(value) for (name, value) in mapping.items()}
        result = SymbolicScalar._from_clean({})
        for (monomial, coefficient) in self._terms.items():
            kept = []
            factor = SymbolicScalar.constant(coefficient)
            for (name, power) in monomial:
                if name in replacements:
                    factor = factor * (replacements[name] ** power)
                else:
                    kept.append((name, power))
            result = result + factor * SymbolicScalar._from_clean({tuple(kept): Fraction(1)})
        return result

    def contract(self, variables, into):
        """
            Rewrites every product (a*b*...)^k of the given variables as into^k.
            Every monomial must carry the same exponent on all of `variables`.
        """
        variables = tuple(variables)
        terms = {}
        for (monomial, coefficient) in self._terms.items():
            exponents = dict(monomial)
            powers = {exponents.pop(name, 0) for name in variables}
            if len(powers) != 1:
                raise ValueError(
                    "monomial {:s} is not a power of {:s}".format(str(monomial), "*".join(variables))
                )
            power = powers.pop()
            if power:
                exponents[into] = exponents.get(into, 0) + power
            monomial = tuple(sorted(exponents.items(), key=lambda item: variable_key(item[0])))
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return SymbolicScalar(terms)


def _format_fraction(value):
    if value.denominator == 1:
        return "{:d}".format(value.numerator)
    return "{:d}/{:d}".format(value.numerator, value.denominator)
