"""
    Builtin corpus of Dirichlet series in D_0.
"""

from fractions import Fraction

import numpy as np

from dirlag import globals
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.cli import data_validation
from dirlag.cli.exceptions import UnknownBuiltin, SpecValidationError

RANDOM_NUMERATOR_BOUND = 9
RANDOM_DENOMINATOR_BOUND = 9


def zeta_minus_1(order, mode=globals.EXACT):
    return DirichletSeries([0] + [1] * (order - 1), mode)


def log_zeta(order, mode=globals.EXACT):
    """
        c_{p^k} = 1/k, every other coefficient 0.
    """
    values = [0] * order
    for n in range(2, order + 1):
        factors = arith.factorize(n)
        if len(factors) == 1:
            values[n - 1] = Fraction(1, factors[0][1])
    return DirichletSeries(values, mode)


def prime_zeta(order, mode=globals.EXACT):
    return DirichletSeries([1 if arith.is_prime(n) else 0 for n in range(1, order + 1)], mode)


def two_power(order, mode=globals.EXACT):
    return DirichletSeries.from_dict(order, {2: 1}, mode)


def random_rational(order, mode=globals.EXACT, seed=0, density=0.5, positive=False):
    """
        Seeded rationals p/q with 1 <= |p|, q <= 9 at indices 2..N, each present with
        probability `density`.
    """
    if seed is None:
        raise SpecValidationError("random_rational needs a seed")
    if not data_validation.is_probability(density):
        raise SpecValidationError("density expected to be a number in [0, 1]. Got {:s}".format(repr(density)))
    if not isinstance(positive, bool):
        raise SpecValidationError("positive expected to be a bool. Got {:s}".format(repr(positive)))
    rng = np.random.default_rng(int(seed))
    values = [0] * order
    for n in range(2, order + 1):
        if rng.random() >= float(density):
            continue
        numerator = int(rng.integers(1, RANDOM_NUMERATOR_BOUND + 1))
        if not positive and rng.random() < 0.5:
            numerator = -numerator
        denominator = int(rng.integers(1, RANDOM_DENOMINATOR_BOUND + 1))
        values[n - 1] = Fraction(numerator, denominator)
    return DirichletSeries(values, mode)


BUILTINS = {
    "zeta_minus_1": zeta_minus_1,
    "log_zeta": log_zeta,
    "prime_zeta": prime_zeta,
    "two_power": two_power,
    "random_rational": random_rational,
}


def builtin(name, order, mode=globals.EXACT, **params):
    if name not in BUILTINS:
        raise UnknownBuiltin(name)
    assert isinstance(order, int) and order >= 1, "order expected to be a positive int. Got {:s}".format(repr(order))
    try:
        return BUILTINS[name](order, mode, **params)
    except TypeError as ex:
        raise SpecValidationError("bad parameters for {:s}: {:s}".format(name, str(ex)))
