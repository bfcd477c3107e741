"""
Tests para los miembros del comité.
"""
import math

import numpy as np
from django.test import SimpleTestCase

from committee.base import MemberKind, as_training_set, features_of, is_unit
from committee.knn import KNearest
from committee.lda import FisherLda
from committee.members import Committee
from committee.svc import SvcRbf, dual_objective, rbf_kernel, scale_gamma
from committee.tree import DecisionTree
from core.exceptions import SingleClassError
from datasets.patterns import DataPoint, generate_pool, get_pattern, label_points


def random_labeled(rng, n, both=True):
    while True:
        xs = rng.uniform(0, math.pi, size=n)
        ys = rng.choice([-1.0, 1.0], size=n)
        if not both or len(set(ys)) == 2:
            return features_of(xs), ys


def pattern_set(pattern_id, seed, n=20):
    pattern = get_pattern(pattern_id)
    return as_training_set(label_points(pattern, generate_pool(pattern, n, seed=seed)))


def brute_force_dual(y, K, C=1.0, steps=10):
    """Máximo del dual sobre una grilla del simplex factible."""
    n = len(y)
    grid = np.stack(
        np.meshgrid(*[np.arange(steps + 1, dtype=np.int16)] * n, indexing='ij'), axis=-1
    ).reshape(-1, n)
    grid = grid[grid @ y.astype(np.int16) == 0]
    alphas = grid * (C / steps)
    ay = alphas * y
    values = alphas.sum(axis=1) - 0.5 * np.einsum('ni,ij,nj->n', ay, K, ay)
    return float(values.max())


class FeatureTests(SimpleTestCase):

    def test_unit_features(self):
        xs = np.random.default_rng(0).uniform(0, math.pi, size=1000)
        self.assertTrue(is_unit(features_of(xs)))


class SvcTests(SimpleTestCase):

    def test_two_points(self):
        X, y = features_of([0.2, 2.9]), np.array([-1.0, 1.0])
        svc = SvcRbf().fit(X, y)
        self.assertEqual(len(svc.support), 2)
        np.testing.assert_array_equal(svc.predict(X), [-1, 1])

    def test_alternating_square(self):
        xs = [math.pi / 8, 3 * math.pi / 8, 5 * math.pi / 8, 7 * math.pi / 8]
        y = np.array([1.0, -1.0, 1.0, -1.0])
        svc = SvcRbf(gamma=10.0).fit(features_of(xs), y)
        np.testing.assert_array_equal(svc.predict(features_of(xs)), y)

    def test_objective_against_brute_force(self):
        rng = np.random.default_rng(1)
        for _ in range(3):
            X, y = random_labeled(rng, 6)
            svc = SvcRbf().fit(X, y)
            K = rbf_kernel(X, X, scale_gamma(X))
            self.assertGreaterEqual(svc.objective, brute_force_dual(y, K) - 1e-2)

    def test_objective_nondecreasing(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            X, y = random_labeled(rng, 12)
            trace = np.array(SvcRbf().fit(X, y).objective_trace)
            self.assertTrue(np.all(np.diff(trace) >= -1e-6))

    def test_constraints_hold(self):
        X, y = random_labeled(np.random.default_rng(3), 15)
        svc = SvcRbf(C=0.5).fit(X, y)
        self.assertTrue(np.all((svc.alphas >= 0) & (svc.alphas <= 0.5)))
        self.assertAlmostEqual(float(svc.alphas @ y), 0.0, places=5)
        self.assertAlmostEqual(svc.objective, dual_objective(svc.alphas, y, svc.K))

    def test_single_class_rejected(self):
        with self.assertRaises(SingleClassError):
            SvcRbf().fit(features_of([0.1, 0.2]), np.array([1.0, 1.0]))


class KnnTests(SimpleTestCase):

    def test_duplicated_point(self):
        X = features_of([0.5, 0.5, 0.5, 2.0])
        knn = KNearest().fit(X, np.array([-1.0, -1.0, -1.0, 1.0]))
        self.assertEqual(knn.predict_angle(0.5), -1)

    def test_majority_vote(self):
        knn = KNearest().fit(features_of([1.0, 1.1, 1.2, 3.0]), np.array([1.0, -1.0, 1.0, -1.0]))
        self.assertEqual(knn.predict_angle(1.1), 1)

    def test_fewer_points_than_k(self):
        knn = KNearest().fit(features_of([1.0, 2.0]), np.array([1.0, -1.0]))
        self.assertEqual(len(knn.neighbors(features_of([1.0])[0])), 2)
        self.assertEqual(knn.predict_angle(1.0), 1)

    def test_neighbors_match_exhaustive_search(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            X, y = random_labeled(rng, int(rng.integers(3, 15)), both=False)
            knn = KNearest().fit(X, y)
            query = features_of([rng.uniform(0, math.pi)])[0]
            d = np.sum((X - query) ** 2, axis=1)
            expected = sorted(range(len(X)), key=lambda i: (d[i], i))[:3]
            self.assertEqual(knn.neighbors(query).tolist(), expected)


class LdaTests(SimpleTestCase):

    def test_two_points(self):
        X = features_of([0.3, 2.5])
        np.testing.assert_array_equal(FisherLda().fit(X, np.array([1.0, -1.0])).predict(X), [1, -1])

    def test_symmetric_means(self):
        offsets = np.array([[0.1, 0.0], [-0.1, 0.0], [0.0, 0.1], [0.0, -0.1]])
        mu = np.array([0.6, 0.3])
        X = np.vstack([mu + offsets, -mu + offsets])
        y = np.array([1.0] * 4 + [-1.0] * 4)
        lda = FisherLda().fit(X, y)
        delta = lda.mu_pos - lda.mu_neg
        self.assertAlmostEqual(lda.w[0] * delta[1] - lda.w[1] * delta[0], 0.0, places=6)
        self.assertGreater(float(lda.w @ delta), 0.0)
        self.assertEqual(int(lda.predict(np.zeros(2))[0]), 1)

    def test_single_class_rejected(self):
        with self.assertRaises(SingleClassError):
            FisherLda().fit(features_of([0.1, 0.2]), np.array([-1.0, -1.0]))

    def test_midpoint_threshold_often_below_majority(self):
        """Test el umbral en el punto medio ignora la proporción de clases en el patrón 3."""
        pattern = get_pattern(3)
        below = fitted = 0
        for seed in range(200):
            X, y = as_training_set(label_points(pattern, generate_pool(pattern, 13, seed=seed)))
            if len(set(y)) < 2:
                continue
            fitted += 1
            lda = FisherLda().fit(X, y)
            self.assertAlmostEqual(lda.threshold, float(lda.w @ (lda.mu_pos + lda.mu_neg)) / 2)
            baseline = max(np.mean(y > 0), np.mean(y < 0))
            if np.mean(lda.predict(X) == y) < baseline:
                below += 1
        self.assertGreaterEqual(fitted, 150)
        self.assertGreaterEqual(below, 100)


class TreeTests(SimpleTestCase):

    def test_pure_data(self):
        tree = DecisionTree().fit(features_of([0.1, 0.5, 0.9]), np.array([-1.0] * 3))
        self.assertTrue(tree.root.is_leaf)
        self.assertEqual(tree.root.label, -1)

    def test_two_points(self):
        X = features_of([0.3, 2.0])
        tree = DecisionTree().fit(X, np.array([1.0, -1.0]))
        self.assertEqual(tree.root.max_depth(), 1)
        np.testing.assert_array_equal(tree.predict(X), [1, -1])

    def test_fits_pattern_sets(self):
        for pattern_id in (1, 2, 3):
            for seed in range(30):
                X, y = pattern_set(pattern_id, seed)
                tree = DecisionTree().fit(X, y)
                np.testing.assert_array_equal(tree.predict(X), y)

    def test_fits_small_random_sets(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            X, y = random_labeled(rng, int(rng.integers(1, 9)), both=False)
            tree = DecisionTree().fit(X, y)
            np.testing.assert_array_equal(tree.predict(X), y)
            self.assertLessEqual(tree.root.max_depth(), 7)


class CommitteeTests(SimpleTestCase):

    def test_votes_shape(self):
        pattern = get_pattern(2)
        data = label_points(pattern, generate_pool(pattern, 20, seed=6))
        committee = Committee().fit(data)
        votes = committee.votes([0.1, 1.5, 2.9])
        self.assertEqual(votes.shape, (4, 3))
        self.assertTrue(set(np.unique(votes)) <= {-1, 1})

    def test_deterministic(self):
        pattern = get_pattern(3)
        data = label_points(pattern, generate_pool(pattern, 20, seed=7))
        xs = np.linspace(0, math.pi, 50, endpoint=False)
        np.testing.assert_array_equal(Committee().fit(data).votes(xs), Committee().fit(data).votes(xs))

    def test_majority_baseline(self):
        cases = [(1, tuple(MemberKind)), (2, (MemberKind.TREE7,))]
        for pattern_id, kinds in cases:
            for seed in range(10):
                pattern = get_pattern(pattern_id)
                data = label_points(pattern, generate_pool(pattern, 20, seed=seed))
                _, y = as_training_set(data)
                baseline = max(np.mean(y > 0), np.mean(y < 0))
                committee = Committee(kinds).fit(data)
                for votes in committee.votes([p.x for p in data]):
                    self.assertGreaterEqual(np.mean(votes == y), baseline)

    def test_single_class_rejected(self):
        with self.assertRaises(SingleClassError):
            Committee().fit([DataPoint(0.1, 1), DataPoint(0.4, 1)])
