"""
Tests para las estrategias de selección y el bucle de aprendizaje activo.
"""
import math

import numpy as np
from django.test import SimpleTestCase

from active_learning.loop import ALConfig, al_train, epoch_study
from active_learning.strategies import Strategy, qbc_vote_entropy, select_next, uncertainty, usamp_score
from classifier.estimator import ExpectationEstimator
from classifier.params import Backend, ModelParams
from core.exceptions import EmptyDataError, PoolTooSmallError, SingleClassError
from datasets.patterns import DataPoint, generate_pool, generate_test_grid, get_pattern
from qsim.circuits import ClassifierKind, analytic_expectation


class UnanimousCommittee:

    def votes(self, xs):
        return np.ones((4, len(xs)), dtype=int)


def run_al(strategy, kind=ClassifierKind.VQC, pattern_id=3, seed=0, **overrides):
    pattern = get_pattern(pattern_id)
    rng = np.random.default_rng(seed)
    pool = generate_pool(pattern, 20, seed=rng)
    params0 = ModelParams.random(kind, rng)
    estimator = ExpectationEstimator(Backend.ANALYTIC)
    config = ALConfig(**overrides)
    result = al_train(
        strategy, pattern, pool, config,
        params0=params0, estimator=estimator, rng=np.random.default_rng(seed + 50),
        test_grid=generate_test_grid(pattern, 100),
    )
    return pool, result


class UncertaintyTests(SimpleTestCase):

    def test_examples(self):
        self.assertAlmostEqual(float(uncertainty(0.0)), -0.5)
        self.assertAlmostEqual(float(uncertainty(1.0)), -1.0)
        self.assertAlmostEqual(float(uncertainty(-1.0)), -1.0)

    def test_argmax_is_argmin_abs_expectation(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            params = ModelParams.nevqc(*rng.uniform(0, math.pi, size=2))
            pool = [DataPoint(x) for x in rng.uniform(0, math.pi, size=15)]
            estimator = ExpectationEstimator(Backend.ANALYTIC)
            index, _ = select_next(Strategy.USAMP, params, pool, estimator)
            z = [abs(analytic_expectation(params.kind, p.x, params.values)) for p in pool]
            self.assertEqual(index, int(np.argmin(z)))

    def test_score_counts_evaluation(self):
        estimator = ExpectationEstimator(Backend.ANALYTIC)
        usamp_score(ModelParams.vqc(0.1), 0.4, estimator)
        self.assertEqual(estimator.counter.evaluations, 1)


class VoteEntropyTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(qbc_vote_entropy([1, 1, 1, 1]), 0.0)
        self.assertAlmostEqual(qbc_vote_entropy([1, -1, 1, -1]), math.log(2))
        self.assertAlmostEqual(qbc_vote_entropy([1, 1, 1, -1]), 0.56234, places=5)

    def test_empty_rejected(self):
        with self.assertRaises(EmptyDataError):
            qbc_vote_entropy([])


class SelectNextTests(SimpleTestCase):

    def test_single_item(self):
        estimator = ExpectationEstimator(Backend.ANALYTIC)
        index, _ = select_next(Strategy.USAMP, ModelParams.vqc(0.3), [DataPoint(1.0)], estimator)
        self.assertEqual(index, 0)

    def test_nearest_to_boundary(self):
        pool = [DataPoint(math.pi / 2), DataPoint(math.pi / 4 + 0.01)]
        estimator = ExpectationEstimator(Backend.ANALYTIC)
        index, _ = select_next(Strategy.USAMP, ModelParams.vqc(math.pi / 2), pool, estimator)
        self.assertEqual(index, 1)
        self.assertEqual(estimator.counter.evaluations, 2)

    def test_unanimous_committee_picks_first(self):
        pool = [DataPoint(x) for x in (0.4, 1.2, 2.2)]
        estimator = ExpectationEstimator(Backend.ANALYTIC)
        index, score = select_next(Strategy.QBC, UnanimousCommittee(), pool, estimator)
        self.assertEqual((index, score), (0, 0.0))
        self.assertEqual(estimator.counter.evaluations, 0)

    def test_empty_pool(self):
        with self.assertRaises(EmptyDataError):
            select_next(Strategy.USAMP, ModelParams.vqc(0.0), [], ExpectationEstimator())


class ALTrainTests(SimpleTestCase):

    def test_labeled_sizes(self):
        _, usamp = run_al(Strategy.USAMP)
        _, qbc = run_al(Strategy.QBC)
        self.assertEqual(len(usamp.labeled), 12)
        self.assertEqual(len(qbc.labeled), 13)
        self.assertEqual(usamp.rounds[-1].labeled_size_after, 12)
        self.assertEqual(len(qbc.trace.probes()), 11)

    def test_selections_are_new_items(self):
        for strategy in (Strategy.USAMP, Strategy.QBC):
            pool, result = run_al(strategy, seed=1)
            chosen = [r.chosen_x for r in result.rounds]
            seeds = {p.x for p in result.seed_points}
            self.assertEqual(len(set(chosen)), len(chosen))
            self.assertFalse(seeds & set(chosen))
            self.assertTrue(set(chosen) <= {p.x for p in pool})
            self.assertEqual({p.label for p in result.seed_points}, {1, -1})

    def test_usamp_picks_least_certain(self):
        for kind in (ClassifierKind.VQC, ClassifierKind.NEVQC):
            pool, result = run_al(Strategy.USAMP, kind=kind, seed=2)
            remaining = [p.x for p in pool if p.x not in {s.x for s in result.seed_points}]
            for selection in result.rounds:
                params = selection.params_before
                z = [abs(analytic_expectation(params.kind, x, params.values)) for x in remaining]
                chosen = abs(analytic_expectation(params.kind, selection.chosen_x, params.values))
                self.assertEqual(chosen, min(z))
                remaining.remove(selection.chosen_x)

    def test_evaluation_accounting(self):
        _, usamp = run_al(Strategy.USAMP, seed=3)
        expected = sum(10 * 2 * (2 + r) + (19 - r) for r in range(1, 11))
        self.assertEqual(usamp.trace.last.evaluations, expected)
        self.assertEqual(usamp.rounds[0].evaluations_spent, 18)

        _, qbc = run_al(Strategy.QBC, seed=3)
        self.assertEqual(qbc.trace.last.evaluations, sum(10 * 2 * (3 + r) for r in range(1, 11)))

    def test_selection_count_toggle(self):
        _, result = run_al(Strategy.USAMP, seed=3, count_selection_evals=False)
        self.assertEqual(result.trace.last.evaluations, sum(10 * 2 * (2 + r) for r in range(1, 11)))

    def test_rounds_without_epochs_still_measure(self):
        _, result = run_al(Strategy.USAMP, pattern_id=2, epochs_per_round=0)
        measured = result.trace.probes()
        self.assertEqual(len(measured), 11)
        self.assertEqual([row.labeled_size for row in measured], list(range(2, 13)))
        self.assertEqual(result.trace.last.evaluations, sum(19 - r for r in range(1, 11)))
        self.assertEqual(
            [row.evaluations for row in measured[1:]],
            [selection.evaluations_spent for selection in result.rounds],
        )

    def test_reproducible(self):
        _, first = run_al(Strategy.QBC, kind=ClassifierKind.NEVQC, seed=4)
        _, second = run_al(Strategy.QBC, kind=ClassifierKind.NEVQC, seed=4)
        self.assertEqual(first.trace.rows, second.trace.rows)
        self.assertEqual(first.rounds, second.rounds)

    def test_cold_start_differs(self):
        _, warm = run_al(Strategy.USAMP, seed=5)
        _, cold = run_al(Strategy.USAMP, seed=5, warm_start=False)
        self.assertEqual(warm.rounds[0], cold.rounds[0])
        self.assertNotEqual(warm.params, cold.params)

    def test_pool_too_small(self):
        pattern = get_pattern(1)
        with self.assertRaises(PoolTooSmallError):
            al_train(
                Strategy.USAMP, pattern, generate_pool(pattern, 5, seed=0), ALConfig(),
                params0=ModelParams.vqc(0.0), estimator=ExpectationEstimator(),
                rng=np.random.default_rng(0),
            )

    def test_single_class_pool(self):
        pattern = get_pattern(1)
        pool = [DataPoint(x) for x in np.linspace(0.9, 2.2, 14)]
        with self.assertRaises(SingleClassError):
            al_train(
                Strategy.QBC, pattern, pool, ALConfig(),
                params0=ModelParams.vqc(0.0), estimator=ExpectationEstimator(),
                rng=np.random.default_rng(0),
            )


class EpochStudyTests(SimpleTestCase):

    def test_curves_per_epoch_setting(self):
        pattern = get_pattern(2)
        pool = generate_pool(pattern, 6, seed=0, scheme='even')
        curves = epoch_study(
            pattern, pool, ModelParams.vqc(0.5),
            estimator_factory=lambda: ExpectationEstimator(Backend.ANALYTIC),
            rng_factory=lambda: np.random.default_rng(1),
            epochs_options=(1, 2), max_labeled=6,
            test_grid=generate_test_grid(pattern, 50),
        )
        self.assertEqual(sorted(curves), [1, 2])
        for points in curves.values():
            self.assertEqual([size for size, _ in points], [2, 3, 4, 5, 6])
