"""
Bucle de aprendizaje activo basado en pool.

Cada ronda: seleccionar un dato, consultar al oráculo del patrón,
reentrenar `epochs_per_round` épocas con el conjunto etiquetado y medir la
precisión de prueba.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import Optional

from active_learning.strategies import Strategy, select_next
from classifier.optim import AdamState
from classifier.params import ModelParams, TrainConfig
from classifier.training import RunTrace, TraceRow, analytic_loss, grid_accuracy, train
from committee.members import Committee
from core.exceptions import ConfigError, PoolTooSmallError, SingleClassError
from datasets.patterns import DataPoint, pattern_label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ALConfig:
    rounds: int = 10
    epochs_per_round: int = 10
    initial_size: Optional[int] = None
    warm_start: bool = True
    count_selection_evals: bool = True
    train: TrainConfig = field(default_factory=TrainConfig)

    def __post_init__(self):
        if self.rounds < 0 or self.epochs_per_round < 0:
            raise ConfigError('rounds y epochs_per_round deben ser >= 0')
        if self.initial_size is not None and self.initial_size < 2:
            raise ConfigError('initial_size debe ser >= 2')

    def initial_size_for(self, strategy) -> int:
        if self.initial_size is not None:
            return self.initial_size
        return Strategy(strategy).initial_size

    @property
    def round_train_config(self) -> TrainConfig:
        return replace(self.train, epochs=self.epochs_per_round, test_interval=self.epochs_per_round)


@dataclass(frozen=True)
class SelectionRound:
    round_index: int
    chosen_x: float
    score: float
    labeled_size_after: int
    evaluations_spent: int
    params_before: Optional[ModelParams] = None

    def as_row(self) -> dict:
        return {
            'round': self.round_index,
            'chosen_x': self.chosen_x,
            'score': self.score,
            'labeled_size': self.labeled_size_after,
            'evaluations': self.evaluations_spent,
        }


@dataclass
class ALResult:
    params: ModelParams
    trace: RunTrace
    rounds: list
    seed_points: list
    labeled: list


def seed_labeled_set(pattern, pool, size: int, rng) -> list:
    """Índices iniciales elegidos al azar, remuestreados hasta tener ambas etiquetas."""
    labels = [pattern_label(pattern, point.x) for point in pool]
    if set(labels) != {1, -1}:
        raise SingleClassError('El pool no contiene ambas etiquetas')
    while True:
        indices = sorted(rng.choice(len(pool), size=size, replace=False).tolist())
        if {labels[i] for i in indices} == {1, -1}:
            return indices


def snapshot_row(epoch, params, labeled, counter, test_grid) -> TraceRow:
    """Fila de traza sin entrenar: pérdida analítica y precisión del estado actual."""
    return TraceRow(
        epoch=epoch,
        labeled_size=len(labeled),
        evaluations=counter.evaluations,
        rotation_distance=counter.rotation_distance,
        loss=analytic_loss(params, labeled),
        test_accuracy=grid_accuracy(params, test_grid) if test_grid is not None else None,
    )


def al_train(strategy, pattern, pool, config: ALConfig, *, params0: ModelParams, estimator,
             rng, test_grid=None, route_tracker=None) -> ALResult:
    """Entrenar con selección activa desde el pool; retorna parámetros, traza y rondas."""
    strategy = Strategy(strategy)
    if strategy == Strategy.NONE:
        raise ConfigError('al_train requiere la estrategia usamp o qbc')
    initial = config.initial_size_for(strategy)
    if len(pool) < initial + config.rounds:
        raise PoolTooSmallError(
            f'El pool de {len(pool)} datos no alcanza para {initial} iniciales y {config.rounds} rondas'
        )

    seed_indices = seed_labeled_set(pattern, pool, initial, rng)
    labeled = [pool[i].labeled(pattern_label(pattern, pool[i].x)) for i in seed_indices]
    unlabeled = [point for i, point in enumerate(pool) if i not in seed_indices]
    seed_points = list(labeled)

    params = params0
    adam_state = AdamState.zeros(len(params0.values))
    train_config = config.round_train_config
    counter = estimator.counter
    trace = RunTrace()
    trace.append(snapshot_row(0, params, labeled, counter, test_grid))

    rounds = []
    for round_index in range(1, config.rounds + 1):
        if strategy == Strategy.QBC:
            model = Committee().fit(labeled)
        else:
            model = params
        index, score = select_next(
            strategy, model, unlabeled, estimator, count=config.count_selection_evals
        )
        chosen = unlabeled.pop(index)
        labeled.append(DataPoint(chosen.x, pattern_label(pattern, chosen.x)))
        selection = SelectionRound(
            round_index=round_index,
            chosen_x=chosen.x,
            score=score,
            labeled_size_after=len(labeled),
            evaluations_spent=counter.evaluations,
            params_before=params,
        )
        rounds.append(selection)
        logger.info(
            'Ronda %s (%s): x=%.6f puntaje=%.6f etiquetados=%s',
            round_index, strategy, chosen.x, score, len(labeled),
        )

        if not config.warm_start:
            params, adam_state = params0, AdamState.zeros(len(params0.values))
        result = train(
            params, labeled, train_config, estimator,
            test_grid=test_grid,
            adam_state=adam_state,
            epoch_offset=(round_index - 1) * config.epochs_per_round,
            route_tracker=route_tracker,
            record_initial=False,
        )
        params, adam_state = result.params, result.adam_state
        trace.extend(result.trace)
        if not result.trace:
            # Sin épocas por ronda la ronda igual deja su medición.
            trace.append(snapshot_row(
                round_index * config.epochs_per_round, params, labeled, counter, test_grid,
            ))

    return ALResult(params=params, trace=trace, rounds=rounds, seed_points=seed_points, labeled=labeled)


def epoch_study(pattern, pool, params0: ModelParams, estimator_factory, rng_factory, *,
                epochs_options=(10, 20, 30), max_labeled: int = 20, test_grid=None,
                train_config: Optional[TrainConfig] = None) -> dict:
    """Precisión de prueba según el tamaño etiquetado, para varias épocas por dato.

    El conjunto etiquetado crece por USAMP hasta `max_labeled`. Las fábricas
    entregan un estimador y un generador nuevos por cada opción de épocas.
    """
    initial = Strategy.USAMP.initial_size
    pool = list(pool)[:max_labeled]
    results = {}
    for epochs in epochs_options:
        config = ALConfig(
            rounds=len(pool) - initial,
            epochs_per_round=epochs,
            train=train_config or TrainConfig(),
        )
        outcome = al_train(
            Strategy.USAMP, pattern, pool, config,
            params0=params0, estimator=estimator_factory(), rng=rng_factory(),
            test_grid=test_grid,
        )
        results[epochs] = [
            (row.labeled_size, row.test_accuracy) for row in outcome.trace.probes()
        ]
    return results
