"""
    Multiplicative number theory helpers backed by a smallest-prime-factor sieve.

    The sieve is module state, grown on demand and shared by every series operation
    of the process, so factorisations, Omega(n) and ln(n) expansions cost O(log n).
"""

import logging
import math
from functools import lru_cache
from threading import RLock

import numpy as np

from dirlag import globals
from dirlag.helpers import logger_module_name
from dirlag.polyalg.symbolic import SymbolicScalar

_log = logging.getLogger(logger_module_name(__file__))

__lock = RLock()
__smallest_prime_factor = np.arange(2, dtype=np.int64)


def initialise(limit):
    """
        Makes sure the sieve covers every integer up to `limit`.
    """
    global __smallest_prime_factor
    assert isinstance(limit, int) and limit >= 1, "limit expected to be a positive int. Got {:s}".format(repr(limit))

    with __lock:
        if limit < len(__smallest_prime_factor):
            return
        size = max(limit + 1, 2 * len(__smallest_prime_factor))
        sieve = np.zeros(size, dtype=np.int64)
        for p in range(2, math.isqrt(size - 1) + 1):
            if sieve[p] == 0:
                multiples = sieve[p * p::p]
                multiples[multiples == 0] = p
        unmarked = np.nonzero(sieve == 0)[0]
        sieve[unmarked] = unmarked
        __smallest_prime_factor = sieve
        _log.debug("Smallest prime factor sieve extended to {:d}".format(size - 1))


def smallest_prime_factor(n):
    assert isinstance(n, int) and n >= 2, "n expected to be an int >= 2. Got {:s}".format(repr(n))
    initialise(n)
    return int(__smallest_prime_factor[n])


@lru_cache(maxsize=None)
def factorize(n):
    """
        :return: tuple of (prime, multiplicity) pairs, primes increasing
    """
    assert isinstance(n, int) and n >= 1, "n expected to be a positive int. Got {:s}".format(repr(n))
    factors = []
    while n > 1:
        p = smallest_prime_factor(n)
        multiplicity = 0
        while n % p == 0:
            n //= p
            multiplicity += 1
        factors.append((p, multiplicity))
    return tuple(factors)


@lru_cache(maxsize=None)
def divisors(n):
    """
        :return: sorted tuple of the divisors of n
    """
    found = [1]
    for (p, multiplicity) in factorize(n):
        found = [d * p ** k for d in found for k in range(multiplicity + 1)]
    return tuple(sorted(found))


def big_omega(n):
    return sum(multiplicity for (_, multiplicity) in factorize(n))


def is_prime(n):
    return n >= 2 and smallest_prime_factor(n) == n


def is_prime_power(n):
    return n >= 2 and len(factorize(n)) == 1


def primes_up_to(limit):
    initialise(max(limit, 2))
    return tuple(p for p in range(2, limit + 1) if __smallest_prime_factor[p] == p)


def are_coprime(m, n):
    return math.gcd(m, n) == 1


@lru_cache(maxsize=None)
def log_symbol(n):
    """
        ln(n) as the linear form sum(m_i * L_{p_i}).
    """
    result = SymbolicScalar.constant(0)
    for (p, multiplicity) in factorize(n):
        result = result + SymbolicScalar.log_prime(p) * multiplicity
    return result


def log_value(n, mode):
    if mode == globals.EXACT:
        return log_symbol(n)
    return complex(math.log(n))


def floor_log2(n):
    assert isinstance(n, int) and n >= 1, "n expected to be a positive int. Got {:s}".format(repr(n))
    return n.bit_length() - 1
