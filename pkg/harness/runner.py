"""
Ejecución de corridas por semilla, agregación sobre una grilla común de
evaluaciones y razones de costo AL / sin AL.
"""
import logging
import multiprocessing as mp
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from active_learning.loop import al_train
from active_learning.strategies import Strategy
from classifier.estimator import ExpectationEstimator
from classifier.params import Backend, ModelParams
from classifier.training import train
from core.exceptions import ConfigError
from datasets.patterns import generate_pool, generate_test_grid, get_pattern, label_points
from harness.config import ExperimentConfig, run_streams
from route_planner.routes import RouteTracker
from theory.bounds import mean_abs_error

logger = logging.getLogger(__name__)

MATCH_TOLERANCE = 1e-12


@dataclass
class RunResult:
    config: ExperimentConfig
    seed: int
    trace: object
    params: ModelParams
    rounds: list = field(default_factory=list)

    @property
    def name(self) -> str:
        return f'{self.config.name}_s{self.seed}'


@dataclass
class AggregateRow:
    evaluations: int
    mean_accuracy: float
    std_accuracy: float
    mean_labeled_size: float
    runs: int


@dataclass
class SuiteResult:
    config: ExperimentConfig
    runs: list
    aggregate: list

    @property
    def name(self) -> str:
        return self.config.name

    @property
    def final(self) -> AggregateRow:
        return self.aggregate[-1]


@dataclass(frozen=True)
class CostRatioRow:
    labeling_ratio: float
    computation_ratio: float
    matched: bool
    target_accuracy: float
    match_evaluations: Optional[int] = None


@dataclass(frozen=True)
class ErrorReport:
    loss_error: float
    accuracy_error: float


def run_single(config: ExperimentConfig, seed: int) -> RunResult:
    """Una corrida completa; sus generadores se derivan solo de `seed`."""
    streams = run_streams(seed)
    pattern = get_pattern(config.pattern)
    pool = generate_pool(pattern, config.pool_size, seed=streams['data'], scheme=config.pool_scheme)
    params0 = ModelParams.random(config.classifier, streams['init'])
    estimator = ExpectationEstimator(config.backend, config.resolved_shots, streams['shot'])
    tracker = RouteTracker(config.route_metric)
    test_grid = generate_test_grid(pattern, config.test_size)
    logger.info('Inicio %s semilla=%s', config.name, seed)

    if config.strategy == Strategy.NONE:
        result = train(
            params0, label_points(pattern, pool), config.train_config(), estimator,
            test_grid=test_grid, route_tracker=tracker,
        )
        run = RunResult(config, seed, result.trace, result.params)
    else:
        result = al_train(
            config.strategy, pattern, pool, config.al_config(),
            params0=params0, estimator=estimator, rng=streams['select'],
            test_grid=test_grid, route_tracker=tracker,
        )
        run = RunResult(config, seed, result.trace, result.params, result.rounds)

    logger.info('Fin %s semilla=%s evaluaciones=%s', config.name, seed, run.trace.last.evaluations)
    return run


def _run_job(job) -> RunResult:
    return run_single(*job)


def run_many(jobs, n_workers: int = 1) -> list:
    """Ejecutar pares (config, semilla) conservando el orden de entrada."""
    jobs = list(jobs)
    if n_workers <= 1 or len(jobs) <= 1:
        return [_run_job(job) for job in jobs]
    with mp.Pool(processes=min(n_workers, len(jobs))) as pool:
        return pool.map(_run_job, jobs)


def _step_values(evaluations, values, grid) -> np.ndarray:
    """Interpolación escalonada: último valor con evaluaciones <= punto de grilla."""
    idx = np.searchsorted(np.asarray(evaluations), grid, side='right') - 1
    return np.asarray(values, dtype=float)[np.clip(idx, 0, None)]


def aggregate_runs(runs) -> list:
    """Media y desviación de la precisión sobre la unión de evaluaciones de prueba."""
    probes = [run.trace.probes() for run in runs]
    grid = np.unique(np.concatenate([[row.evaluations for row in rows] for rows in probes]))
    accuracies, sizes = [], []
    for rows in probes:
        evaluations = [row.evaluations for row in rows]
        accuracies.append(_step_values(evaluations, [row.test_accuracy for row in rows], grid))
        sizes.append(_step_values(evaluations, [row.labeled_size for row in rows], grid))
    accuracies, sizes = np.vstack(accuracies), np.vstack(sizes)
    return [
        AggregateRow(
            evaluations=int(e),
            mean_accuracy=float(accuracies[:, j].mean()),
            std_accuracy=float(accuracies[:, j].std()),
            mean_labeled_size=float(sizes[:, j].mean()),
            runs=len(runs),
        )
        for j, e in enumerate(grid)
    ]


def run_suite(config: ExperimentConfig, jobs: int = 1) -> SuiteResult:
    config = config.resolved()
    runs = run_many([(config, seed) for seed in config.seeds], jobs)
    return SuiteResult(config, runs, aggregate_runs(runs))


def run_matrix(configs, jobs: int = 1) -> list:
    """Varias configuraciones en un solo pool de trabajo; una SuiteResult por config."""
    configs = [config.resolved() for config in configs]
    jobs_list = [(config, seed) for config in configs for seed in config.seeds]
    runs = run_many(jobs_list, jobs)
    suites, start = [], 0
    for config in configs:
        chunk = runs[start:start + len(config.seeds)]
        start += len(config.seeds)
        suites.append(SuiteResult(config, chunk, aggregate_runs(chunk)))
    return suites


def cost_ratios(al_result: SuiteResult, non_al_result: SuiteResult) -> CostRatioRow:
    """Razones de etiquetado y cómputo en el primer punto donde AL iguala al entrenamiento sin AL.

    La prueba inicial sin entrenar (0 evaluaciones) no cuenta como coincidencia.
    """
    target = non_al_result.final.mean_accuracy
    total = non_al_result.final.evaluations
    pool_size = non_al_result.final.mean_labeled_size
    if total == 0:
        raise ConfigError('La corrida sin AL no registró evaluaciones')
    for row in al_result.aggregate:
        if row.evaluations > 0 and row.mean_accuracy >= target - MATCH_TOLERANCE:
            return CostRatioRow(
                labeling_ratio=row.mean_labeled_size / pool_size,
                computation_ratio=row.evaluations / total,
                matched=True,
                target_accuracy=target,
                match_evaluations=row.evaluations,
            )
    final = al_result.final
    return CostRatioRow(
        labeling_ratio=final.mean_labeled_size / pool_size,
        computation_ratio=final.evaluations / total,
        matched=False,
        target_accuracy=target,
    )


def compare_to_analytic(sampled_run: RunResult, analytic_run: RunResult) -> ErrorReport:
    """Error absoluto medio de pérdida y precisión en las filas de prueba."""
    sampled = sampled_run.trace.probes()
    analytic = analytic_run.trace.probes()
    return ErrorReport(
        loss_error=mean_abs_error([r.loss for r in sampled], [r.loss for r in analytic]),
        accuracy_error=mean_abs_error(
            [r.test_accuracy for r in sampled], [r.test_accuracy for r in analytic]
        ),
    )


def compare_suites(config: ExperimentConfig, jobs: int = 1) -> list:
    """Correr la misma configuración con ambos backends y comparar por semilla."""
    sampled = run_suite(replace(config, backend=Backend.SAMPLED), jobs)
    analytic = run_suite(replace(config, backend=Backend.ANALYTIC), jobs)
    return [
        (s.seed, compare_to_analytic(s, a)) for s, a in zip(sampled.runs, analytic.runs)
    ]
