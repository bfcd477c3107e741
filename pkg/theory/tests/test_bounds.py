"""
Tests para la geometría de líneas, cotas de precisión y calibración.
"""
import math

import numpy as np
from django.test import SimpleTestCase

from classifier.params import ModelParams
from classifier.training import grid_accuracy
from core.exceptions import InvalidProbabilityError, LengthMismatchError
from datasets.patterns import PATTERNS, generate_test_grid
from qsim.circuits import ClassifierKind, analytic_expectation
from theory import bounds
from theory.calibration import calibration_sweep


class LineGeometryTests(SimpleTestCase):

    def test_vqc_lines_perpendicular(self):
        rng = np.random.default_rng(0)
        for rho in rng.uniform(0, math.pi, size=1000):
            pair = bounds.vqc_lines(rho)
            if not (math.isinf(pair.k1) or math.isinf(pair.k2)):
                self.assertLess(abs(pair.k1 * pair.k2 + 1.0), 1e-9)
            self.assertAlmostEqual(bounds.included_angle(pair), math.pi / 2, places=9)

    def test_vqc_line_angles_example(self):
        angles = sorted(bounds.line_angles(bounds.vqc_lines(math.pi / 2)))
        self.assertAlmostEqual(angles[0], math.pi / 4)
        self.assertAlmostEqual(angles[1], 3 * math.pi / 4)

    def test_vertical_sentinel(self):
        pair = bounds.vqc_lines(math.pi / 4)
        self.assertTrue(math.isinf(pair.k1))
        self.assertAlmostEqual(pair.gamma1, math.pi / 2)
        self.assertTrue(pair.perpendicular)

    def test_nevqc_included_angle(self):
        rng = np.random.default_rng(1)
        for rho1, rho2 in rng.uniform(0, math.pi, size=(1000, 2)):
            pair = bounds.nevqc_lines(rho1, rho2)
            expected = math.atan(abs(math.tan(2 * rho2)))
            self.assertLess(abs(bounds.included_angle(pair) - expected), 1e-9)

    def test_nevqc_special_cases(self):
        self.assertTrue(bounds.nevqc_lines(0.7, math.pi / 4).perpendicular)
        self.assertAlmostEqual(bounds.included_angle(bounds.nevqc_lines(0.7, 0.0)), 0.0)

    def test_boundaries_are_expectation_zeros(self):
        rng = np.random.default_rng(2)
        eps = 1e-4
        for _ in range(200):
            rho = rng.uniform(0, math.pi)
            for gamma in bounds.line_angles(bounds.vqc_lines(rho)):
                z = analytic_expectation(ClassifierKind.VQC, gamma, (rho,))
                self.assertLess(abs(z), 1e-6)
            rho1 = rng.uniform(0, math.pi)
            rho2 = rng.uniform(0.2, math.pi / 2 - 0.2)
            for gamma in bounds.line_angles(bounds.nevqc_lines(rho1, rho2)):
                params = (rho1, rho2)
                self.assertLess(abs(analytic_expectation(ClassifierKind.NEVQC, gamma, params)), 1e-6)
                left = analytic_expectation(ClassifierKind.NEVQC, gamma - eps, params)
                right = analytic_expectation(ClassifierKind.NEVQC, gamma + eps, params)
                self.assertLess(left * right, 0.0)


class AccuracyBoundTests(SimpleTestCase):

    def test_max_accuracy_examples(self):
        self.assertAlmostEqual(bounds.max_accuracy(math.pi / 2, math.pi / 2), 1.0)
        self.assertAlmostEqual(bounds.max_accuracy(math.pi / 4, math.pi / 2), 0.75)
        self.assertAlmostEqual(bounds.max_accuracy(math.atan(0.25), math.pi / 2), 0.5779, places=4)

    def test_optimal_rho2(self):
        self.assertAlmostEqual(bounds.nevqc_optimal_rho2(math.pi / 4), math.pi / 8)
        self.assertEqual(bounds.nevqc_optimal_rho2(0.0), 0.0)
        self.assertAlmostEqual(bounds.nevqc_optimal_rho2(math.atan(0.25)), 0.12249, places=5)
        for pattern in PATTERNS.values():
            rho2 = bounds.nevqc_optimal_rho2(pattern.delta_beta)
            delta_gamma = math.atan(abs(math.tan(2 * rho2)))
            self.assertAlmostEqual(bounds.max_accuracy(pattern.delta_beta, delta_gamma), 1.0)

    def test_candidates_share_included_angle(self):
        for delta_beta in (0.3, math.pi / 4, 1.2):
            first, second = bounds.nevqc_rho2_candidates(delta_beta)
            self.assertAlmostEqual(
                bounds.included_angle(bounds.nevqc_lines(0.4, first)),
                bounds.included_angle(bounds.nevqc_lines(0.4, second)),
            )

    def test_bound_table(self):
        rows = bounds.bound_table()
        self.assertEqual([row['pattern'] for row in rows], [1, 2, 3])
        for row, vqc in zip(rows, (1.0, 0.75, 0.5779)):
            self.assertAlmostEqual(row['vqc_bound'], vqc, places=4)
            self.assertAlmostEqual(row['nevqc_bound'], 1.0, places=9)

    def test_vqc_brute_force_matches_bound(self):
        """Test el mejor rho de una grilla de 2000 alcanza la cota del VQC."""
        rhos = (np.arange(2000) + 0.5) * math.pi / 2000
        for pattern in PATTERNS.values():
            grid = generate_test_grid(pattern, 500)
            best = max(grid_accuracy(ModelParams.vqc(rho), grid) for rho in rhos)
            self.assertLess(abs(best - bounds.max_accuracy(pattern.delta_beta, math.pi / 2)), 0.01)

    def test_nevqc_brute_force_reaches_one(self):
        rho1s = (np.arange(2000) + 0.5) * math.pi / 2000
        for pattern in PATTERNS.values():
            grid = generate_test_grid(pattern, 500)
            best = max(
                grid_accuracy(ModelParams.nevqc(rho1, rho2), grid)
                for rho2 in bounds.nevqc_rho2_candidates(pattern.delta_beta)
                for rho1 in rho1s
            )
            self.assertGreaterEqual(best, 0.995)


class FidelityTests(SimpleTestCase):

    def test_examples(self):
        self.assertAlmostEqual(bounds.statistical_fidelity(0.3, 0.3), 1.0)
        self.assertAlmostEqual(bounds.statistical_fidelity(1.0, 0.0), 0.0)
        self.assertAlmostEqual(bounds.statistical_fidelity(0.5, 1.0), 0.5)
        self.assertAlmostEqual(bounds.infidelity(0.5, 1.0), 0.5)

    def test_rejects_invalid_probability(self):
        with self.assertRaises(InvalidProbabilityError):
            bounds.statistical_fidelity(1.2, 0.5)

    def test_mean_abs_error(self):
        self.assertEqual(bounds.mean_abs_error([1, 2], [1, 2]), 0.0)
        self.assertAlmostEqual(bounds.mean_abs_error([1, 3], [2, 5]), 1.5)
        self.assertAlmostEqual(bounds.mean_abs_error([2, 5], [1, 3]), 1.5)
        with self.assertRaises(LengthMismatchError):
            bounds.mean_abs_error([1, 2], [1])


class CalibrationTests(SimpleTestCase):

    def test_sweep_fidelity(self):
        result = calibration_sweep(steps=400, shots=2000, seed=3)
        self.assertEqual(len(result.rows()), 400)
        self.assertLess(result.mean_infidelity, 1e-3)
        self.assertTrue(np.all(result.fidelities <= 1.0 + 1e-12))

    def test_reproducible(self):
        first = calibration_sweep(steps=50, shots=100, seed=4)
        second = calibration_sweep(steps=50, shots=100, seed=4)
        np.testing.assert_array_equal(first.observed, second.observed)
