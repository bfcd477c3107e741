"""
Parámetros de los modelos, configuración de entrenamiento y contador de costo.
"""
import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from django.db import models

from core.exceptions import ConfigError
from qsim.circuits import ClassifierKind


class Backend(models.TextChoices):
    ANALYTIC = ('analytic', 'Analítico')
    SAMPLED = ('sampled', 'Muestreado')


DEFAULT_SHOTS = {
    ClassifierKind.VQC: 2000,
    ClassifierKind.NEVQC: 5500,
    ClassifierKind.NEVQC_STAR: 5500,
}


@dataclass(frozen=True)
class ModelParams:
    """Parámetros de rotación: (rho,) para VQC, (rho1, rho2) para NEVQC."""

    kind: str
    values: tuple

    def __post_init__(self):
        kind = ClassifierKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'values', tuple(float(v) for v in self.values))
        if len(self.values) != kind.n_params:
            raise ConfigError(
                f'{kind.label} requiere {kind.n_params} parámetros, recibió {len(self.values)}'
            )

    @classmethod
    def vqc(cls, rho: float) -> 'ModelParams':
        return cls(ClassifierKind.VQC, (rho,))

    @classmethod
    def nevqc(cls, rho1: float, rho2: float, interference: bool = False) -> 'ModelParams':
        kind = ClassifierKind.NEVQC_STAR if interference else ClassifierKind.NEVQC
        return cls(kind, (rho1, rho2))

    @classmethod
    def random(cls, kind, rng) -> 'ModelParams':
        """Inicialización uniforme en [0, pi) por parámetro."""
        kind = ClassifierKind(kind)
        return cls(kind, tuple(rng.uniform(0.0, math.pi, size=kind.n_params)))

    @property
    def rho(self) -> float:
        return self.values[0]

    @property
    def rho1(self) -> float:
        return self.values[0]

    @property
    def rho2(self) -> float:
        return self.values[1]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def with_values(self, values) -> 'ModelParams':
        return replace(self, values=tuple(values))

    def shifted(self, index: int, delta: float) -> 'ModelParams':
        values = list(self.values)
        values[index] += delta
        return self.with_values(values)


@dataclass(frozen=True)
class TrainConfig:
    """Configuración del entrenamiento con Adam."""

    epochs: int = 35
    shots: Optional[int] = None
    backend: str = Backend.ANALYTIC
    learning_rate: float = 0.1
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    test_interval: int = 5

    def __post_init__(self):
        object.__setattr__(self, 'backend', Backend(self.backend))
        if self.epochs < 0:
            raise ConfigError('epochs debe ser >= 0')
        if self.backend == Backend.SAMPLED and self.shots is not None and self.shots < 1:
            raise ConfigError('shots debe ser >= 1 con backend muestreado')
        if not (0.0 < self.adam_beta1 < 1.0 and 0.0 < self.adam_beta2 < 1.0):
            raise ConfigError('beta1 y beta2 deben estar en (0, 1)')
        if self.learning_rate <= 0:
            raise ConfigError('learning_rate debe ser positivo')
        if self.test_interval < 0:
            raise ConfigError('test_interval debe ser >= 0')

    def shots_for(self, kind) -> int:
        return self.shots if self.shots is not None else DEFAULT_SHOTS[ClassifierKind(kind)]


@dataclass
class EvalCounter:
    """Costo acumulado: evaluaciones de expectativa y distancia de rotación."""

    evaluations: int = 0
    rotation_distance: float = 0.0

    def add_evaluations(self, n: int = 1):
        self.evaluations += n

    def add_rotation(self, distance: float):
        self.rotation_distance += distance
