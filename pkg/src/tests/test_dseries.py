import unittest
import logging
import math
import sys
from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from dirlag import globals
from dirlag import dseries
from dirlag.dseries import arith
from dirlag.dseries.operations import dpowers, graded_exp_step
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.cli.builtins import zeta_minus_1, log_zeta, two_power, random_rational

log = logging.getLogger()
if sys.flags.debug:
    log.setLevel(logging.DEBUG)

DirichletSeries = dseries.DirichletSeries
ORDER = 24

L2 = SymbolicScalar.log_prime(2)
L3 = SymbolicScalar.log_prime(3)
w = SymbolicScalar.symbol("w")


def series_in_d0(order=ORDER):
    coefficients = st.dictionaries(
        st.integers(2, order), st.fractions(min_value=-3, max_value=3, max_denominator=5), max_size=6
    )
    return coefficients.map(lambda mapping: DirichletSeries.from_dict(order, mapping))


def zeta(order, mode=globals.EXACT):
    return zeta_minus_1(order, mode) + DirichletSeries.identity(order, mode)


class Sieve(unittest.TestCase):
    def test_factorize(self):
        self.assertEqual(dseries.factorize(360), ((2, 3), (3, 2), (5, 1)))
        self.assertEqual(dseries.factorize(1), ())
        self.assertEqual(dseries.factorize(97), ((97, 1),))

    def test_divisors_match_sympy(self):
        for n in range(1, 200):
            self.assertEqual(list(dseries.divisors(n)), [int(d) for d in sympy.divisors(n)])

    def test_big_omega(self):
        self.assertEqual(dseries.big_omega(1), 0)
        self.assertEqual(dseries.big_omega(64), 6)
        self.assertEqual(dseries.big_omega(60), 4)

    def test_primes(self):
        self.assertEqual(arith.primes_up_to(30), (2, 3, 5, 7, 11, 13, 17, 19, 23, 29))
        self.assertTrue(arith.is_prime_power(27))
        self.assertFalse(arith.is_prime_power(12))

    def test_growth_beyond_initial_size(self):
        arith.initialise(5000)
        self.assertEqual(arith.smallest_prime_factor(4999), 4999)
        self.assertEqual(arith.smallest_prime_factor(4997), 19)

    def test_log_value(self):
        self.assertEqual(dseries.log_value(12, globals.EXACT), L2 * 2 + L3)
        self.assertAlmostEqual(dseries.log_value(12, globals.NUMERIC).real, math.log(12), places=14)

    def test_floor_log2(self):
        self.assertEqual(arith.floor_log2(1), 0)
        self.assertEqual(arith.floor_log2(64), 6)
        self.assertEqual(arith.floor_log2(63), 5)


class SeriesContainer(unittest.TestCase):
    def test_indexing_is_one_based(self):
        f = DirichletSeries.from_dict(8, {2: 1, 8: Fraction(1, 3)})
        self.assertEqual(f[2], 1)
        self.assertEqual(f[8], Fraction(1, 3))
        self.assertEqual(f.support(), (2, 8))
        self.assertTrue(f.in_d0())
        self.assertFalse(f.is_unit())

    def test_order_mismatch(self):
        with self.assertRaises(dseries.OrderMismatch):
            two_power(8) + two_power(9)

    def test_mode_mismatch(self):
        with self.assertRaises(dseries.ModeMismatch):
            two_power(8) + two_power(8, globals.NUMERIC)

    def test_truncate_and_extend(self):
        f = log_zeta(16)
        self.assertEqual(f.truncate(9), log_zeta(9))
        self.assertEqual(f.truncate(9).extend(16).support(), (2, 3, 4, 5, 7, 8, 9))

    def test_first_difference(self):
        f = log_zeta(16)
        g = f.map(lambda n, c: c + 1 if n == 11 else c)
        self.assertEqual(f.first_difference(g), 11)
        self.assertIsNone(f.first_difference(f))

    def test_numeric_conversion(self):
        f = log_zeta(16).to_numeric()
        self.assertEqual(f.mode, globals.NUMERIC)
        self.assertAlmostEqual(f[8].real, 1 / 3, places=15)


class Convolution(unittest.TestCase):
    def test_divisor_function(self):
        square = dseries.dmul(zeta(100), zeta(100))
        for n in range(1, 101):
            self.assertEqual(square[n], int(sympy.divisor_count(n)))

    def test_generalised_divisor_function(self):
        def d3(n):
            return sum(1 for a in dseries.divisors(n) for b in dseries.divisors(n // a))

        cube = dseries.dpow(zeta(64), 3)
        for n in range(1, 65):
            self.assertEqual(cube[n], d3(n), "n = {:d}".format(n))

    def test_identity(self):
        f = random_rational(ORDER, seed=3)
        self.assertEqual(f * DirichletSeries.identity(ORDER), f)

    @settings(derandomize=True, max_examples=40, deadline=None)
    @given(series_in_d0(), series_in_d0(), series_in_d0())
    def test_ring_laws(self, a, b, c):
        self.assertEqual(a * b, b * a)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)

    def test_powers_vanish_below_two_to_the_power(self):
        for (j, power) in enumerate(dpowers(zeta_minus_1(64)), start=1):
            self.assertEqual(power.support()[0], 2 ** j)


class ExpLogPow(unittest.TestCase):
    def test_exp_of_log_zeta_is_zeta(self):
        self.assertEqual(dseries.dexp(log_zeta(64)), zeta(64))

    def test_log_of_zeta(self):
        self.assertEqual(dseries.dlog(zeta(64)), log_zeta(64))

    @settings(derandomize=True, max_examples=30, deadline=None)
    @given(series_in_d0(), series_in_d0())
    def test_exp_is_a_homomorphism(self, a, b):
        self.assertEqual(dseries.dexp(a + b), dseries.dexp(a) * dseries.dexp(b))
        self.assertEqual(dseries.dlog(dseries.dexp(a)), a)

    def test_graded_recursion_matches_power_sums(self):
        for seed in range(5):
            h = random_rational(48, seed=seed)
            self.assertEqual(dseries.dexp_graded(h), dseries.dexp(h))

    def test_graded_recursion_with_symbols(self):
        h = log_zeta(32).scale(w * L2)
        self.assertEqual(dseries.dexp_graded(h), dseries.dexp(h))

    def test_graded_step(self):
        h = two_power(8)
        known = [SymbolicScalar.constant(1), SymbolicScalar.constant(1)]
        step = graded_exp_step(4, lambda d: h[d], lambda m: known[m - 1], globals.EXACT)
        self.assertEqual(step, Fraction(1, 2))

    def test_log_recursion_numeric(self):
        h = random_rational(64, globals.NUMERIC, seed=11)
        self.assertTrue(dseries.dexp_log_recursive(h).is_close(dseries.dexp(h)))

    def test_pow_with_symbolic_exponent(self):
        x = SymbolicScalar.symbol("x")
        power = dseries.dpow(zeta(16), x)
        self.assertEqual(power[4], (x * x + x) * Fraction(1, 2))
        self.assertEqual(power[6], x * x)

    def test_pow_laws(self):
        u = zeta(32)
        self.assertEqual(dseries.dpow(u, 2), u * u)
        self.assertEqual(dseries.dpow(u, Fraction(1, 2)) * dseries.dpow(u, Fraction(1, 2)), u)

    def test_pow_adds_symbolic_exponents(self):
        x = SymbolicScalar.symbol("x")
        y = SymbolicScalar.symbol("y")
        u = zeta(32) + random_rational(32, seed=3)
        self.assertEqual(dseries.dpow(u, x) * dseries.dpow(u, y), dseries.dpow(u, x + y))

    def test_not_in_d0(self):
        with self.assertRaises(dseries.NotInD0):
            dseries.dexp(zeta(8))

    def test_not_unit(self):
        with self.assertRaises(dseries.NotUnit):
            dseries.dlog(two_power(8))

    def test_exact_numeric_agreement(self):
        h = random_rational(64, seed=5)
        exact = dseries.dexp(h).to_numeric()
        numeric = dseries.dexp(h.to_numeric())
        self.assertTrue(exact.is_close(numeric, 1e-9))


class DerivativeAndShift(unittest.TestCase):
    def test_derivative(self):
        f = zeta_minus_1(12)
        derivative = dseries.dderiv(f)
        self.assertEqual(derivative[6], -(L2 + L3))
        self.assertEqual(derivative[1], 0)

    def test_derivative_is_a_derivation(self):
        a = random_rational(32, seed=1)
        b = random_rational(32, seed=2)
        self.assertEqual(dseries.dderiv(a * b), dseries.dderiv(a) * b + a * dseries.dderiv(b))

    def test_integer_shift(self):
        shifted = dseries.dshift(zeta_minus_1(8), 2)
        self.assertEqual(shifted[3], 9)
        self.assertEqual(dseries.dshift(shifted, -2), zeta_minus_1(8))

    def test_inexact_shift(self):
        with self.assertRaises(dseries.InexactShift):
            dseries.dshift(zeta_minus_1(8), Fraction(1, 2))
        with self.assertRaises(dseries.InexactShift):
            dseries.dshift(zeta_minus_1(8), w)

    def test_numeric_shift(self):
        shifted = dseries.dshift(zeta_minus_1(8, globals.NUMERIC), 0.5)
        self.assertAlmostEqual(shifted[4].real, 2.0, places=14)


class InnerComposition(unittest.TestCase):
    def test_zero_inner_series(self):
        f = random_rational(ORDER, seed=4)
        self.assertEqual(dseries.compose_inner(f, DirichletSeries.zero(ORDER), w), f)

    def test_two_power(self):
        g = random_rational(32, seed=6)
        composed = dseries.compose_inner(two_power(32), g, w)
        expected = dseries.dexp(g.truncate(16).scale(w * L2))
        for m in range(1, 17):
            self.assertEqual(composed[2 * m], expected[m])
        for n in range(1, 33, 2):
            self.assertEqual(composed[n], 0)

    def test_matches_the_analytic_composition(self):
        f = random_rational(16, globals.NUMERIC, seed=7)
        g = random_rational(16, globals.NUMERIC, seed=8)
        composed = dseries.compose_inner(f, g, 0.5)

        def evaluate(series, s):
            return sum(c * n ** -s for (n, c) in series.items())

        for s in (30, 25 + 3j, 40 - 2j):
            inner = s - 0.5 * evaluate(g, s)
            expected = sum(c * k ** -inner for (k, c) in f.items())
            self.assertLess(abs(evaluate(composed, s) - expected), 1e-9 * abs(expected), "s = {}".format(s))
