"""
Predicción, pérdida MSE, gradientes por parameter-shift y bucle de entrenamiento.

En cada época las m expectativas sin desplazar se calculan una sola vez y
se comparten entre la pérdida y el residuo del gradiente: 2m evaluaciones
por época en VQC y 5m en NEVQC.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from classifier.estimator import ExpectationEstimator
from classifier.optim import AdamState, adam_step
from core.exceptions import EmptyDataError
from datasets.patterns import as_arrays
from qsim.circuits import ClassifierKind, analytic_expectation
from route_planner.routes import plan_epoch_route

logger = logging.getLogger(__name__)

SHIFT = math.pi / 4


@dataclass
class TraceRow:
    epoch: int
    labeled_size: int
    evaluations: int
    rotation_distance: float
    loss: float
    test_accuracy: Optional[float] = None


@dataclass
class RunTrace:
    """Registro por época de pérdida, costo y precisión de prueba."""

    rows: list = field(default_factory=list)

    def append(self, row: TraceRow):
        self.rows.append(row)

    def extend(self, other: 'RunTrace'):
        self.rows.extend(other.rows)

    def __len__(self):
        return len(self.rows)

    @property
    def last(self) -> TraceRow:
        return self.rows[-1]

    def probes(self) -> list:
        return [row for row in self.rows if row.test_accuracy is not None]

    def losses(self) -> list:
        return [row.loss for row in self.rows]

    def accuracies(self) -> list:
        return [row.test_accuracy for row in self.probes()]


@dataclass
class TrainResult:
    params: object
    trace: RunTrace
    adam_state: AdamState


def _require_data(data):
    if not data:
        raise EmptyDataError('Se requiere al menos un dato etiquetado')


def sign_label(z):
    """Regla de clasificación: +1 si <Z> >= 0, si no -1."""
    return np.where(np.asarray(z) >= 0.0, 1, -1)


def predict(params, x: float, estimator: ExpectationEstimator) -> int:
    """Predecir la etiqueta de x; solo cuenta evaluación con backend muestreado."""
    z = estimator.expectation(params, x, count=estimator.is_sampled)
    return 1 if z >= 0.0 else -1


def grid_accuracy(params, grid) -> float:
    """Precisión en la grilla de prueba con el backend analítico, sin costo."""
    xs, labels = as_arrays(grid)
    z = analytic_expectation(params.kind, xs, params.values)
    return float(np.mean(sign_label(z) == labels))


def analytic_loss(params, data) -> float:
    xs, ys = as_arrays(data)
    z = analytic_expectation(params.kind, xs, params.values)
    return float(np.sum((z - ys) ** 2))


def mse_loss(params, data, estimator: ExpectationEstimator, expectations=None) -> float:
    """C = sum_i (<Z(x_i)> - y_i)^2; una evaluación por dato si no se entregan."""
    _require_data(data)
    xs, ys = as_arrays(data)
    if expectations is None:
        expectations = estimator.expectations(params, xs)
    return float(np.sum((np.asarray(expectations) - ys) ** 2))


def _residuals(params, data, estimator, unshifted):
    xs, ys = as_arrays(data)
    if unshifted is None:
        unshifted = estimator.expectations(params, xs)
    return xs, np.asarray(unshifted) - ys


def gradient_vqc(params, data, estimator: ExpectationEstimator, unshifted=None) -> float:
    """Gradiente del VQC con un solo desplazamiento.

    sum_i (<Z(x_i, theta)> - y_i) * (2 P0(x_i, theta + pi/4) - 1), que
    iguala la forma de dos desplazamientos gracias a la identidad
    P0(theta + pi/4) + P0(theta - pi/4) = 1.
    """
    _require_data(data)
    xs, residuals = _residuals(params, data, estimator, unshifted)
    shifted = params.shifted(0, SHIFT)
    factors = np.array([2.0 * estimator.vqc_prob0(shifted, x) - 1.0 for x in xs])
    return float(np.sum(residuals * factors))


def gradient_nevqc(params, data, estimator: ExpectationEstimator, unshifted=None) -> tuple:
    """Gradiente del NEVQC: dos desplazamientos por parámetro, el otro fijo."""
    _require_data(data)
    xs, residuals = _residuals(params, data, estimator, unshifted)
    grads = []
    for index in range(2):
        plus = estimator.expectations(params.shifted(index, SHIFT), xs)
        minus = estimator.expectations(params.shifted(index, -SHIFT), xs)
        grads.append(float(np.sum(residuals * (plus - minus) / 2.0)))
    return tuple(grads)


def gradient(params, data, estimator, unshifted=None) -> np.ndarray:
    if params.kind == ClassifierKind.VQC:
        return np.array([gradient_vqc(params, data, estimator, unshifted)])
    return np.array(gradient_nevqc(params, data, estimator, unshifted))


def train(
    params0,
    data,
    config,
    estimator: ExpectationEstimator,
    *,
    test_grid=None,
    adam_state: Optional[AdamState] = None,
    epoch_offset: int = 0,
    route_tracker=None,
    record_initial: bool = True,
) -> TrainResult:
    """Entrenar `config.epochs` épocas de pérdida + gradiente + Adam.

    La fila inicial usa la pérdida analítica y no suma evaluaciones. Se
    registra la precisión de prueba cada `config.test_interval` épocas y en
    la última.
    """
    _require_data(data)
    counter = estimator.counter
    params = params0
    state = adam_state.copy() if adam_state is not None else AdamState.zeros(len(params.values))
    trace = RunTrace()
    xs, _ = as_arrays(data)

    def probe(epoch):
        if test_grid is None or config.test_interval == 0:
            return None
        if epoch % config.test_interval == 0 or epoch == config.epochs:
            return grid_accuracy(params, test_grid)
        return None

    if record_initial:
        trace.append(TraceRow(
            epoch=epoch_offset,
            labeled_size=len(data),
            evaluations=counter.evaluations,
            rotation_distance=counter.rotation_distance,
            loss=analytic_loss(params, data),
            test_accuracy=probe(0),
        ))

    for epoch in range(1, config.epochs + 1):
        unshifted = estimator.expectations(params, xs)
        loss = mse_loss(params, data, estimator, expectations=unshifted)
        grads = gradient(params, data, estimator, unshifted=unshifted)
        if route_tracker is not None:
            counter.add_rotation(route_tracker.advance(
                plan_epoch_route(params, xs, route_tracker.metric)
            ))
        params, state = adam_step(state, params, grads, config)
        logger.debug('epoch=%s loss=%.6f params=%s', epoch_offset + epoch, loss, params.values)
        trace.append(TraceRow(
            epoch=epoch_offset + epoch,
            labeled_size=len(data),
            evaluations=counter.evaluations,
            rotation_distance=counter.rotation_distance,
            loss=loss,
            test_accuracy=probe(epoch),
        ))

    return TrainResult(params=params, trace=trace, adam_state=state)
