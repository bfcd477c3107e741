"""
Patrones que dividen el arco [0, pi), pools sin etiquetar y grillas de prueba.

El patrón es también el oráculo de etiquetado: el segmento central
[beta_min, beta_max) recibe +1 y el resto -1.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from core.exceptions import ConfigError, EmptyDataError

logger = logging.getLogger(__name__)

POOL_SCHEMES = ('random', 'even')


@dataclass(frozen=True)
class Pattern:
    """Patrón definido por la diferencia de ángulos de sus márgenes."""

    id: int
    delta_beta: float

    def __post_init__(self):
        if not 0.0 < self.delta_beta < math.pi:
            raise ConfigError(f'delta_beta fuera de (0, pi): {self.delta_beta}')

    @property
    def beta_min(self) -> float:
        return (math.pi - self.delta_beta) / 2

    @property
    def beta_max(self) -> float:
        return (math.pi + self.delta_beta) / 2

    @property
    def positive_fraction(self) -> float:
        return self.delta_beta / math.pi


PATTERNS = {
    1: Pattern(1, math.pi / 2),
    2: Pattern(2, math.pi / 4),
    3: Pattern(3, math.atan(1 / 4)),
}


def get_pattern(pattern_id) -> Pattern:
    """Retornar un patrón incorporado por id."""
    try:
        return PATTERNS[int(pattern_id)]
    except (KeyError, ValueError, TypeError):
        raise ConfigError(f'Patrón desconocido: {pattern_id}') from None


@dataclass(frozen=True)
class DataPoint:
    """Ángulo en [0, pi) con etiqueta opcional en {+1, -1}."""

    x: float
    label: Optional[int] = None

    @property
    def features(self) -> tuple:
        return (math.cos(self.x), math.sin(self.x))

    def labeled(self, label: int) -> 'DataPoint':
        return replace(self, label=label)


def pattern_label(pattern: Pattern, x: float) -> int:
    """Etiqueta del oráculo; x se reduce módulo pi."""
    x = math.fmod(x, math.pi)
    if x < 0:
        x += math.pi
    return 1 if pattern.beta_min <= x < pattern.beta_max else -1


def label_points(pattern: Pattern, points) -> list:
    """Consultar al oráculo por cada punto."""
    return [point.labeled(pattern_label(pattern, point.x)) for point in points]


def _has_both_classes(pattern, xs) -> bool:
    labels = {pattern_label(pattern, x) for x in xs}
    return labels == {1, -1}


def generate_pool(pattern: Pattern, n: int, seed=None, scheme: str = 'random') -> list:
    """Generar un pool de n puntos sin etiquetar que contiene ambas clases.

    `seed` puede ser un entero o un numpy Generator.
    """
    if n < 2:
        raise EmptyDataError('El pool necesita al menos 2 puntos')
    if scheme not in POOL_SCHEMES:
        raise ConfigError(f'Esquema de pool desconocido: {scheme}')

    if scheme == 'even':
        xs = [(j + 0.5) * math.pi / n for j in range(n)]
        if not _has_both_classes(pattern, xs):
            raise ConfigError(f'Una grilla de {n} puntos no cubre ambas clases')
        return [DataPoint(x) for x in xs]

    rng = np.random.default_rng(seed)
    attempts = 1
    xs = rng.uniform(0.0, math.pi, size=n)
    while not _has_both_classes(pattern, xs):
        attempts += 1
        xs = rng.uniform(0.0, math.pi, size=n)
    if attempts > 1:
        logger.debug('Pool del patrón %s remuestreado %s veces', pattern.id, attempts)
    return [DataPoint(float(x)) for x in xs]


def generate_test_grid(pattern: Pattern, n: int = 500) -> list:
    """Grilla etiquetada x_j = (j + 0.5) pi / n."""
    if n < 1:
        raise EmptyDataError('La grilla necesita al menos 1 punto')
    return label_points(pattern, [DataPoint((j + 0.5) * math.pi / n) for j in range(n)])


def as_arrays(points) -> tuple:
    """Retornar (xs, labels) como arreglos numpy."""
    xs = np.array([point.x for point in points], dtype=float)
    labels = np.array([point.label for point in points], dtype=float)
    return xs, labels
