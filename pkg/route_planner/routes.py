"""
Rutas de rotación de las láminas por época de entrenamiento.

Las posiciones son tuplas (x, theta...) en el espacio de parámetros de
rotación; el recorrido físico de la lámina es la mitad (rho = 2 theta).
"""
import itertools
import math
from dataclasses import dataclass
from typing import Optional

from django.db import models

from core.exceptions import ConfigError, EmptyDataError
from qsim.circuits import ClassifierKind

SHIFT = math.pi / 4


class Metric(models.TextChoices):
    SUM = ('sum', 'Suma de etapas')
    MAX = ('max', 'Máximo de etapas')


@dataclass(frozen=True)
class VisitPoint:
    """Configuración de medición requerida: ángulo del dato y parámetros."""

    x: float
    thetas: tuple

    @property
    def position(self) -> tuple:
        return (self.x, *self.thetas)


def travel(a, b, metric=Metric.SUM) -> float:
    """Recorrido de las etapas entre dos posiciones."""
    deltas = [abs(p - q) for p, q in zip(a, b)]
    if Metric(metric) == Metric.MAX:
        return max(deltas)
    return sum(deltas)


def schedule_cost(points, metric=Metric.SUM, origin=None) -> float:
    return sum(schedule_legs(points, metric, origin))


def schedule_legs(points, metric=Metric.SUM, origin=None) -> list:
    """Costo de cada tramo; el primero parte del origen, si existe."""
    legs = []
    previous = origin
    for point in points:
        legs.append(0.0 if previous is None else travel(previous, point.position, metric))
        previous = point.position
    return legs


@dataclass(frozen=True)
class Schedule:
    """Orden de visita con su costo total dentro de la época."""

    points: tuple
    total_cost: float
    metric: str = Metric.SUM
    origin: Optional[tuple] = None
    group_order: tuple = ()

    @property
    def start(self) -> tuple:
        return self.origin if self.origin is not None else self.points[0].position

    @property
    def end(self) -> tuple:
        return self.points[-1].position

    def legs(self) -> list:
        return schedule_legs(self.points, self.metric, self.origin)

    def rows(self) -> list:
        """Filas `step,x,theta1,theta2,leg_cost` para exportar."""
        rows = []
        for step, (point, leg) in enumerate(zip(self.points, self.legs())):
            thetas = list(point.thetas) + [None] * (2 - len(point.thetas))
            rows.append({
                'step': step,
                'x': point.x,
                'theta1': thetas[0],
                'theta2': thetas[1],
                'leg_cost': leg,
            })
        return rows


def _check_xs(xs) -> list:
    xs = [float(x) for x in xs]
    if not xs:
        raise EmptyDataError('La ruta necesita al menos un ángulo de dato')
    if any(b < a for a, b in zip(xs, xs[1:])):
        raise ConfigError('Los ángulos de la ruta deben venir ordenados')
    return xs


def _build(points, metric, origin=None, group_order=()) -> Schedule:
    points = tuple(points)
    return Schedule(
        points=points,
        total_cost=schedule_cost(points, metric, origin),
        metric=Metric(metric),
        origin=origin,
        group_order=tuple(group_order),
    )


def plan_vqc_route(xs, theta: float, metric=Metric.SUM) -> Schedule:
    """Ruta en U: barrer x en theta + pi/4 y volver en theta.

    Parte y termina en la posición de reposo (x_1, theta).
    """
    xs = _check_xs(xs)
    forward = [VisitPoint(x, (theta + SHIFT,)) for x in xs]
    backward = [VisitPoint(x, (theta,)) for x in reversed(xs)]
    return _build(forward + backward, metric, origin=(xs[0], theta))


def nevqc_groups(rho1: float, rho2: float) -> list:
    """Las cinco configuraciones (rho1, rho2) que pide el gradiente del NEVQC."""
    return [
        (rho1, rho2),
        (rho1 + SHIFT, rho2),
        (rho1 - SHIFT, rho2),
        (rho1, rho2 + SHIFT),
        (rho1, rho2 - SHIFT),
    ]


def transition_cost(order, groups, metric=Metric.SUM) -> float:
    return sum(
        travel(groups[a], groups[b], metric) for a, b in zip(order, order[1:])
    )


def best_group_order(groups, metric=Metric.SUM) -> tuple:
    """Búsqueda exhaustiva del orden de grupos; empates por orden lexicográfico."""
    best_order, best_cost = None, math.inf
    for order in itertools.permutations(range(len(groups))):
        cost = transition_cost(order, groups, metric)
        if cost < best_cost:
            best_order, best_cost = order, cost
    return best_order, best_cost


def plan_nevqc_route(xs, rho1: float, rho2: float, metric=Metric.SUM) -> Schedule:
    """Recorrer los cinco grupos contiguos, barriendo x en serpentina."""
    xs = _check_xs(xs)
    groups = nevqc_groups(rho1, rho2)
    order, _ = best_group_order(groups, metric)
    points = []
    for k, group in enumerate(order):
        sweep = xs if k % 2 == 0 else list(reversed(xs))
        points.extend(VisitPoint(x, groups[group]) for x in sweep)
    return _build(points, metric, group_order=order)


def naive_route(xs, configs, metric=Metric.SUM, origin=None) -> Schedule:
    """Línea base: por cada x, en orden de entrada, visitar todas las configuraciones.

    Con origen, la ruta vuelve a la primera configuración al final.
    """
    xs = [float(x) for x in xs]
    if not xs:
        raise EmptyDataError('La ruta necesita al menos un ángulo de dato')
    points = [VisitPoint(x, tuple(config)) for x in xs for config in configs]
    if origin is not None and len(configs) > 1:
        points.append(VisitPoint(xs[-1], tuple(configs[0])))
    return _build(points, metric, origin=origin)


def plan_epoch_route(params, xs, metric=Metric.SUM) -> Schedule:
    """Ruta planificada para una época del modelo dado."""
    xs = sorted(xs)
    if params.kind == ClassifierKind.VQC:
        return plan_vqc_route(xs, params.rho, metric)
    return plan_nevqc_route(xs, params.rho1, params.rho2, metric)


def naive_epoch_route(params, xs, metric=Metric.SUM) -> Schedule:
    """Ruta de referencia sin planificar para el mismo modelo."""
    xs = _check_xs(sorted(xs))
    if params.kind == ClassifierKind.VQC:
        configs = [(params.rho,), (params.rho + SHIFT,)]
        return naive_route(xs, configs, metric, origin=(xs[0], params.rho))
    return naive_route(xs, nevqc_groups(params.rho1, params.rho2), metric)


def chain_cost(schedules, metric=Metric.SUM) -> float:
    """Costo encadenado: rutas de cada época más el reposicionamiento entre ellas."""
    tracker = RouteTracker(metric)
    return sum(tracker.advance(schedule) for schedule in schedules)


class RouteTracker:
    """Sigue la posición de las etapas entre épocas consecutivas."""

    def __init__(self, metric=Metric.SUM):
        self.metric = Metric(metric)
        self.position = None

    def advance(self, schedule: Schedule) -> float:
        leg = 0.0 if self.position is None else travel(self.position, schedule.start, self.metric)
        self.position = schedule.end
        return leg + schedule.total_cost
