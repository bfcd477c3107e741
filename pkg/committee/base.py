"""
Interfaz común de los miembros del comité y utilidades de características.
"""
import math

import numpy as np
from django.db import models

from core.exceptions import EmptyDataError, SingleClassError


class MemberKind(models.TextChoices):
    SVC_RBF = ('svc_rbf', 'SVC con kernel RBF')
    KNN3 = ('knn3', 'KNN con k=3')
    LDA = ('lda', 'Análisis discriminante lineal')
    TREE7 = ('tree7', 'Árbol de decisión de profundidad 7')


def features_of(xs) -> np.ndarray:
    """Vectores normalizados (cos x, sin x), uno por fila."""
    xs = np.asarray(xs, dtype=float).reshape(-1)
    return np.column_stack([np.cos(xs), np.sin(xs)])


def as_training_set(points) -> tuple:
    """Retornar (X, y) a partir de datos etiquetados."""
    if not points:
        raise EmptyDataError('El comité necesita datos etiquetados')
    X = features_of([p.x for p in points])
    y = np.array([p.label for p in points], dtype=float)
    return X, y


def require_both_classes(y, name: str):
    if set(np.unique(y).tolist()) != {-1.0, 1.0}:
        raise SingleClassError(f'{name} requiere ambas clases en el entrenamiento')


def sign_of(values) -> np.ndarray:
    """+1 cuando el valor es >= 0, si no -1."""
    return np.where(np.asarray(values) >= 0.0, 1, -1)


class CommitteeMember:
    """Clasificador binario sobre características 2-D con etiquetas en {+1, -1}."""

    kind = None

    def fit(self, X, y) -> 'CommitteeMember':
        raise NotImplementedError

    def predict(self, X) -> np.ndarray:
        raise NotImplementedError

    def predict_angle(self, x: float) -> int:
        return int(self.predict(features_of([x]))[0])

    def __repr__(self):
        return f'<{type(self).__name__} {self.kind}>'


def is_unit(X, tol: float = 1e-12) -> bool:
    return all(abs(math.hypot(*row) - 1.0) <= tol for row in X)
