import unittest
import logging
import sys
from fractions import Fraction

import numpy as np

from dirlag import globals
from dirlag import families
from dirlag.checks import all_passed
from dirlag.polyalg.symbolic import SymbolicScalar
from dirlag.polyalg.unipoly import UniPoly
from dirlag.dseries import arith
from dirlag.dseries.series import DirichletSeries
from dirlag.dseries.operations import dexp
from dirlag.dseries.exceptions import NotInD0
from dirlag.families.generation import POWER_SUMS, EXPONENTIAL
from dirlag.families.verification import CHECKS, CONVOLUTION, DEGREE
from dirlag.cli.builtins import zeta_minus_1, log_zeta, prime_zeta, two_power, random_rational

log = logging.getLogger()
if sys.flags.debug:
    log.setLevel(logging.DEBUG)

x = SymbolicScalar.symbol("x")
w = SymbolicScalar.symbol("w")


def corpus(order, mode=globals.EXACT, seeds=range(5)):
    series = [two_power(order, mode), log_zeta(order, mode), prime_zeta(order, mode)]
    series += [random_rational(order, mode, seed=seed) for seed in seeds]
    return series


def poly(*coefficients):
    return UniPoly(coefficients)


class Generation(unittest.TestCase):
    def test_two_power(self):
        fam = families.family_from_generator(two_power(8))
        self.assertEqual(fam[2], poly(0, 1))
        self.assertEqual(fam[4], poly(0, 0, Fraction(1, 2)))
        self.assertEqual(fam[8], poly(0, 0, 0, Fraction(1, 6)))
        for n in (3, 5, 6, 7):
            self.assertTrue(fam[n].is_zero())

    def test_log_zeta_gives_generalised_divisor_polynomials(self):
        fam = families.family_from_generator(log_zeta(16))
        self.assertEqual(fam[3], poly(0, 1))
        self.assertEqual(fam[4], poly(0, Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(fam[6], poly(0, 0, 1))
        self.assertEqual(fam[12], fam[4] * fam[3])
        self.assertEqual(fam.values_at(2)[11], 6)

    def test_expansions_agree(self):
        for f in corpus(32):
            self.assertEqual(
                families.family_from_generator(f, POWER_SUMS), families.family_from_generator(f, EXPONENTIAL)
            )

    def test_generating_series_round_trip(self):
        for f in corpus(32):
            fam = families.family_from_generator(f)
            self.assertEqual(fam.generating_series(), f)
            self.assertEqual(fam.to_series(), dexp(f.scale(x)))

    def test_hat(self):
        fam = families.family_from_generator(log_zeta(8))
        self.assertEqual(fam.hat(4), poly(Fraction(1, 2), Fraction(1, 2)))

    def test_not_in_d0(self):
        with self.assertRaises(NotInD0):
            families.family_from_generator(zeta_minus_1(8) + DirichletSeries.identity(8))

    def test_trivial_family(self):
        fam = families.ConvolutionFamily.trivial(8)
        self.assertTrue(all_passed(families.verify_family(fam)))
        self.assertEqual(fam.generating_series(), DirichletSeries.zero(8))


class FromValues(unittest.TestCase):
    def test_values_at_one(self):
        fam = families.family_from_generator(log_zeta(32))
        rebuilt = families.family_from_values(fam.values_at(1))
        self.assertEqual(rebuilt, fam)

    def test_values_at_other_points(self):
        for f in corpus(24, seeds=(1, 2)):
            fam = families.family_from_generator(f)
            for y0 in (2, Fraction(-1, 3)):
                self.assertEqual(families.family_from_values(fam.values_at(y0), y0), fam)

    def test_divisor_counts(self):
        divisor_counts = [sum(1 for d in range(1, n + 1) if n % d == 0) for n in range(1, 33)]
        rebuilt = families.family_from_values(divisor_counts, 2)
        self.assertEqual(rebuilt, families.family_from_generator(log_zeta(32)))

    def test_invalid_values(self):
        with self.assertRaises(families.InvalidFamilyValues):
            families.family_from_values([2, 1, 1])
        with self.assertRaises(families.InvalidFamilyValues):
            families.family_from_values([1, 1, 1], 0)


class Verification(unittest.TestCase):
    def test_corpus_passes_every_check(self):
        for f in corpus(64):
            results = families.verify_family(families.family_from_generator(f))
            self.assertEqual([result.name for result in results], list(CHECKS))
            self.assertTrue(all_passed(results), str(results))

    def test_numeric_corpus_passes(self):
        for f in corpus(64, globals.NUMERIC, seeds=(7,)):
            self.assertTrue(all_passed(families.verify_family(families.family_from_generator(f))))

    def test_fault_is_located_at_the_corrupted_index(self):
        order = 64
        base = [families.family_from_generator(f) for f in corpus(order)]
        rng = np.random.default_rng(2024)
        for trial in range(50):
            fam = base[trial % len(base)]
            n = int(rng.integers(2, order + 1))
            corrupted = fam.with_poly(n, fam[n] + UniPoly.x() * UniPoly.x())
            failures = [result for result in families.verify_family(corrupted) if not result.passed]
            self.assertTrue(failures, "corruption at {:d} not detected".format(n))
            for failure in failures:
                self.assertEqual(failure.index, n, "{:s} reported {:d} for a fault at {:d}".format(
                    failure.name, failure.index, n
                ))

    def test_degree_fault(self):
        fam = families.family_from_generator(two_power(16))
        corrupted = fam.with_poly(3, poly(0, 1, 1))
        results = families.verify_family(corrupted, (DEGREE,))
        self.assertFalse(results[0].passed)
        self.assertEqual(results[0].index, 3)

    def test_counterexample_carries_both_sides(self):
        fam = families.family_from_generator(log_zeta(8))
        corrupted = fam.with_poly(4, fam[4] + UniPoly.x() * UniPoly.x())
        (result,) = families.verify_family(corrupted, (CONVOLUTION,))
        self.assertEqual(result.index, 4)
        self.assertNotEqual(result.lhs, result.rhs)
        self.assertEqual(result.to_dict()["check"], CONVOLUTION)


class Transforms(unittest.TestCase):
    def test_beta_transform_is_a_family(self):
        for f in corpus(32):
            fam = families.family_from_generator(f)
            for weight in (w, Fraction(1, 2)):
                self.assertTrue(all_passed(families.verify_family(families.beta_transform(fam, weight))))

    def test_beta_round_trip(self):
        for f in corpus(32, seeds=(3,)):
            fam = families.family_from_generator(f)
            self.assertEqual(families.beta_transform(families.beta_transform(fam, w), -w), fam)

    def test_beta_of_two_power(self):
        fam = families.family_from_generator(two_power(8))
        beta = families.beta_transform(fam, w)
        L2 = SymbolicScalar.log_prime(2)
        self.assertEqual(beta[4], poly(0, w * L2, Fraction(1, 2)))

    def test_scale(self):
        fam = families.family_from_generator(log_zeta(32))
        scaled = families.transform(fam, "scale", 3)
        self.assertTrue(all_passed(families.verify_family(scaled)))
        self.assertEqual(scaled, families.family_from_generator(log_zeta(32).scale(3)))

    def test_product(self):
        first = families.family_from_generator(log_zeta(32))
        second = families.family_from_generator(random_rational(32, seed=8))
        result = families.transform(first, "product", second)
        self.assertTrue(all_passed(families.verify_family(result)))
        self.assertEqual(result, families.family_from_generator(log_zeta(32) + random_rational(32, seed=8)))

    def test_twist(self):
        c = DirichletSeries([Fraction(n) ** -2 for n in range(1, 33)])
        fam = families.family_from_generator(random_rational(32, seed=9))
        twisted = families.twist(fam, c)
        self.assertTrue(all_passed(families.verify_family(twisted)))

    def test_twist_rejects_other_sequences(self):
        fam = families.family_from_generator(log_zeta(16))
        with self.assertRaises(families.NotCompletelyMultiplicative):
            families.twist(fam, [1] * 15 + [2])


class Multiplicativity(unittest.TestCase):
    def test_prime_power_support(self):
        self.assertTrue(families.is_multiplicative(families.family_from_generator(log_zeta(64))))
        self.assertTrue(families.is_multiplicative(families.family_from_generator(two_power(64))))

    def test_random_prime_power_support(self):
        for seed in range(5):
            f = random_rational(32, seed=seed).map(lambda n, c: c if len(arith.factorize(n)) == 1 else 0)
            self.assertTrue(families.is_multiplicative(families.family_from_generator(f)), "seed {:d}".format(seed))

    def test_rebuilt_from_values(self):
        generators = [log_zeta(32), random_rational(32, seed=9).map(
            lambda n, c: c if len(arith.factorize(n)) == 1 else 0
        )]
        for f in generators:
            fam = families.family_from_generator(f)
            for y0 in (1, 2, Fraction(1, 2)):
                rebuilt = families.family_from_values(fam.values_at(y0), y0)
                self.assertTrue(families.is_multiplicative(rebuilt), "y0 = {}".format(y0))

    def test_first_failure(self):
        f = DirichletSeries.from_dict(16, {6: 1})
        fam = families.family_from_generator(f)
        self.assertFalse(families.is_multiplicative(fam))
        self.assertEqual(families.first_multiplicativity_failure(fam), (2, 3))


class ExactNumericAgreement(unittest.TestCase):
    def test_numeric_family_matches_exact(self):
        f = random_rational(64, seed=12)
        exact = families.family_from_generator(f)
        numeric = families.family_from_generator(f.to_numeric())
        for n in range(1, 65):
            self.assertTrue(exact[n].to_numeric().is_close(numeric[n], 1e-9), "n = {:d}".format(n))

    def test_numeric_beta(self):
        f = random_rational(64, seed=13)
        exact = families.beta_transform(families.family_from_generator(f), Fraction(37, 100))
        numeric = families.beta_transform(families.family_from_generator(f.to_numeric()), 0.37)
        for n in range(2, 65):
            self.assertTrue(exact[n].to_numeric().is_close(numeric[n], 1e-9), "n = {:d}".format(n))
