"""
Tests para el estimador muestreado del NEVQC.
"""
import math

import numpy as np
from django.test import SimpleTestCase

from classifier import training
from classifier.estimator import ExpectationEstimator
from classifier.params import Backend, ModelParams, TrainConfig
from datasets.patterns import DataPoint
from qsim.circuits import ClassifierKind, analytic_expectation


class SampledNevqcTests(SimpleTestCase):

    def sampled(self, seed, shots=None):
        return ExpectationEstimator(Backend.SAMPLED, shots=shots, rng=np.random.default_rng(seed))

    def test_sampled_mean_is_unbiased(self):
        """Test la media muestral de <Z> cae dentro de 4 sigma del valor analítico."""
        for kind in (ClassifierKind.NEVQC, ClassifierKind.NEVQC_STAR):
            params = ModelParams(kind, (0.7, 0.5))
            x, repeats = 1.1, 1000
            estimator = self.sampled(2024)
            values = np.array([estimator.expectation(params, x) for _ in range(repeats)])
            analytic = analytic_expectation(kind, x, params.values)
            sigma_mean = values.std(ddof=1) / math.sqrt(repeats)
            self.assertGreater(sigma_mean, 0.0)
            self.assertLess(abs(values.mean() - analytic), 4 * sigma_mean)
            self.assertEqual(estimator.counter.evaluations, repeats)

    def test_vanished_record_reads_zero(self):
        estimator = self.sampled(5)
        z = estimator.expectation(ModelParams.nevqc(0.0, 0.0), math.pi / 2)
        self.assertEqual(z, 0.0)

    def test_sampled_run_with_vanished_records_completes(self):
        data = [
            DataPoint(math.pi / 2, -1),
            DataPoint(0.3, 1),
            DataPoint(1.2, -1),
            DataPoint(2.8, 1),
        ]
        config = TrainConfig(epochs=15, backend=Backend.SAMPLED, shots=500, test_interval=0)
        result = training.train(ModelParams.nevqc(0.0, 0.0), data, config, self.sampled(11))
        self.assertEqual(len(result.trace), 16)
        self.assertTrue(all(math.isfinite(loss) for loss in result.trace.losses()))
        self.assertTrue(all(math.isfinite(v) for v in result.params.values))
        self.assertEqual(result.trace.last.evaluations, 15 * 5 * len(data))
