import unittest
import io
import logging
import math
import sys
from fractions import Fraction

import mpmath
import numpy as np

from dirlag import globals
from dirlag import abscissa
from dirlag import inversion
from dirlag.abscissa.minimum import golden_section, CURVE_HEADER

log = logging.getLogger()
if sys.flags.debug:
    log.setLevel(logging.DEBUG)

ZETA_SHIFT = abscissa.zeta_shift(2)


class Evaluation(unittest.TestCase):
    def test_value_matches_mpmath(self):
        result = abscissa.eval_f(ZETA_SHIFT, 0)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.value, float(mpmath.zeta(2)) - 1, places=12)

    def test_derivatives_match_mpmath(self):
        self.assertAlmostEqual(abscissa.eval_fprime(ZETA_SHIFT, 0).value, float(mpmath.zeta(2, derivative=1)), places=12)
        self.assertAlmostEqual(abscissa.eval_fsecond(ZETA_SHIFT, 0).value, float(mpmath.zeta(2, derivative=2)), places=11)

    def test_close_to_the_abscissa(self):
        value = abscissa.eval_f(ZETA_SHIFT, -0.75).value
        self.assertAlmostEqual(value, float(mpmath.zeta(1.25)) - 1, places=10)

    def test_far_right_is_dominated_by_the_first_term(self):
        value = abscissa.eval_f(ZETA_SHIFT, 20).value
        self.assertLess(abs(value / 2.0 ** -22 - 1), 1e-3)

    def test_derivative_is_negative_and_increasing(self):
        slopes = [abscissa.eval_fprime(ZETA_SHIFT, s).value for s in np.linspace(-0.9, 3, 20)]
        for slope in slopes:
            self.assertLess(slope, 0)
        for (left, right) in zip(slopes, slopes[1:]):
            self.assertLess(left, right)

    def test_divergence_at_the_abscissa(self):
        with self.assertRaises(abscissa.TailBoundUnreachable):
            abscissa.eval_f(ZETA_SHIFT, -1)
        with self.assertRaises(abscissa.TailBoundUnreachable):
            abscissa.eval_fprime(abscissa.log_weighted(2, 1.5), -1)

    def test_convergent_boundary(self):
        desc = abscissa.log_weighted(2, 3)
        self.assertTrue(abscissa.eval_f(desc, -1).converged)
        self.assertTrue(abscissa.eval_fprime(desc, -1).converged)

    def test_unreachable_tolerance(self):
        with self.assertRaises(abscissa.TailBoundUnreachable):
            abscissa.eval_f(ZETA_SHIFT, 0, tolerance=1e-30, strict=True)
        result = abscissa.eval_f(ZETA_SHIFT, 0, tolerance=1e-30)
        self.assertFalse(result.converged)
        self.assertAlmostEqual(result.value, float(mpmath.zeta(2)) - 1, places=12)


class Descriptors(unittest.TestCase):
    def test_abscissa(self):
        self.assertEqual(ZETA_SHIFT.sigma_f, -1.0)
        self.assertEqual(abscissa.log_weighted(0.5, 2).sigma_f, 0.5)

    def test_exact_series(self):
        f = ZETA_SHIFT.to_series(8, globals.EXACT)
        self.assertEqual(f[1], 0)
        self.assertEqual(f[4], Fraction(1, 16))

    def test_irrational_coefficients_stay_numeric(self):
        with self.assertRaises(AssertionError):
            abscissa.log_weighted(2, 3).to_series(8, globals.EXACT)
        f = abscissa.log_weighted(2, 3).to_series(8)
        self.assertAlmostEqual(f[2].real, 0.25 / math.log(2) ** 3, places=14)

    def test_solution_is_nonnegative(self):
        f = ZETA_SHIFT.to_series(32)
        self.assertTrue(inversion.solve(f, 0.5).g.is_nonnegative(1e-12))

    def test_lookup(self):
        self.assertEqual(abscissa.descriptor("log_weighted", 2, 3), abscissa.log_weighted(2, 3))


class AbscissaOfSolution(unittest.TestCase):
    def test_interior_minimum(self):
        previous = -math.inf
        for w in (0.25, 1.0, 4.0):
            result = abscissa.sigma_g(ZETA_SHIFT, w)
            self.assertEqual(result.case_tag, abscissa.INTERIOR_MIN)
            self.assertGreater(result.s0, ZETA_SHIFT.sigma_f)
            self.assertLess(abs(abscissa.eval_fprime(ZETA_SHIFT, result.s0).value + 1 / w), 1e-10)
            (_, minimum) = abscissa.minimize_F(ZETA_SHIFT, w)
            self.assertLess(abs(minimum - result.sigma_g), 1e-8, "w = {:g}".format(w))
            self.assertGreater(result.sigma_g, previous)
            previous = result.sigma_g

    def test_boundary_minimum(self):
        desc = abscissa.log_weighted(2, 3)
        result = abscissa.sigma_g(desc, 0.25)
        self.assertEqual(result.case_tag, abscissa.BOUNDARY_MIN)
        self.assertIsNone(result.s0)

        cutoff = 10 ** 6
        n = np.arange(2, cutoff, dtype=np.float64)
        partial = float(np.sum(1.0 / (n * np.log(n) ** 3)))
        tail = 1.0 / (2 * math.log(cutoff) ** 2)
        self.assertLess(abs(result.sigma_g - (-1.0 + 0.25 * (partial + tail))), 1e-2)

        (s_star, minimum) = abscissa.minimize_F(desc, 0.25)
        self.assertAlmostEqual(s_star, desc.sigma_f, places=6)
        self.assertLess(abs(minimum - result.sigma_g), 1e-8)

    def test_log_weighted_across_weights(self):
        desc = abscissa.log_weighted(2, 3)
        previous = -math.inf
        for w in (0.25, 1.0, 4.0):
            result = abscissa.sigma_g(desc, w)
            self.assertIn(result.case_tag, (abscissa.INTERIOR_MIN, abscissa.BOUNDARY_MIN))
            (_, minimum) = abscissa.minimize_F(desc, w)
            self.assertLess(abs(minimum - result.sigma_g), 1e-8, "w = {:g}".format(w))
            self.assertGreater(result.sigma_g, previous)
            previous = result.sigma_g
        self.assertEqual(abscissa.sigma_g(desc, 4.0).case_tag, abscissa.INTERIOR_MIN)

    def test_convexity(self):
        rng = np.random.default_rng(17)

        def big_f(s):
            return s + abscissa.eval_f(ZETA_SHIFT, s).value

        for _ in range(100):
            (a, b) = rng.uniform(-0.9, 3.0, size=2)
            self.assertLessEqual(big_f((a + b) / 2), (big_f(a) + big_f(b)) / 2 + 1e-12)

    def test_serialization(self):
        data = abscissa.sigma_g(ZETA_SHIFT, 1).to_dict()
        self.assertEqual(data["case"], abscissa.INTERIOR_MIN)
        self.assertLess(data["derivative_limit"], -1.0)
        self.assertIn("interior_residual", data)

    def test_positive_weight_only(self):
        with self.assertRaises(AssertionError):
            abscissa.sigma_g(ZETA_SHIFT, 0)


class Curves(unittest.TestCase):
    def test_golden_section(self):
        (s, value) = golden_section(lambda t: (t - 1) ** 2, -3, 4, 1e-10)
        self.assertAlmostEqual(s, 1.0, places=9)
        self.assertAlmostEqual(value, 0.0, places=15)

    def test_single_point(self):
        (row,) = abscissa.curve_dump(ZETA_SHIFT, 1, [0.0])
        (s, big_f, f, slope, error) = row
        self.assertEqual(s, 0.0)
        self.assertAlmostEqual(f, float(mpmath.zeta(2)) - 1, places=12)
        self.assertAlmostEqual(big_f, s + f, places=15)
        self.assertLess(slope, 0)
        self.assertLess(error, 1e-12)

    def test_empty_grid(self):
        self.assertEqual(abscissa.curve_dump(ZETA_SHIFT, 1, []), [])

    def test_grid_below_the_abscissa(self):
        with self.assertRaises(AssertionError):
            abscissa.curve_dump(ZETA_SHIFT, 1, [-2.0])

    def test_csv(self):
        stream = io.StringIO()
        abscissa.write_curve(abscissa.curve_dump(ZETA_SHIFT, 1, [0.5, 1.0]), stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], ",".join(CURVE_HEADER))
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[1].split(",")[0], "0.5")
