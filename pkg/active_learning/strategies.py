"""
Estrategias de selección: muestreo por incertidumbre (USAMP) y consulta por comité (QBC).
"""
import math
from collections import Counter

import numpy as np
from django.db import models

from core.exceptions import EmptyDataError


class Strategy(models.TextChoices):
    NONE = ('none', 'Sin aprendizaje activo')
    USAMP = ('usamp', 'Muestreo por incertidumbre')
    QBC = ('qbc', 'Consulta por comité')

    @property
    def initial_size(self) -> int:
        return 3 if self == Strategy.QBC else 2


def uncertainty(z) -> np.ndarray:
    """U = -max(P+, P-) con P+ = (1 + <Z>) / 2."""
    p_plus = (1.0 + np.asarray(z, dtype=float)) / 2.0
    return -np.maximum(p_plus, 1.0 - p_plus)


def usamp_score(params, x: float, estimator, count: bool = True) -> float:
    return float(uncertainty(estimator.expectation(params, x, count=count)))


def qbc_vote_entropy(votes) -> float:
    """Entropía de votos -sum (V/C) ln(V/C) sobre las etiquetas votadas."""
    votes = list(votes)
    if not votes:
        raise EmptyDataError('Se requiere al menos un voto')
    total = len(votes)
    return float(-sum((v / total) * math.log(v / total) for v in Counter(votes).values()))


def select_next(strategy, model, unlabeled, estimator=None, count: bool = True) -> tuple:
    """Elegir (índice, puntaje) del dato más informativo; empates al menor índice.

    `model` son los parámetros del clasificador para USAMP o un comité
    entrenado para QBC.
    """
    if not unlabeled:
        raise EmptyDataError('El pool sin etiquetar está vacío')
    strategy = Strategy(strategy)
    xs = [point.x for point in unlabeled]
    if strategy == Strategy.USAMP:
        scores = [usamp_score(model, x, estimator, count=count) for x in xs]
    elif strategy == Strategy.QBC:
        scores = [qbc_vote_entropy(column) for column in model.votes(xs).T.tolist()]
    else:
        raise ValueError(f'La estrategia {strategy} no selecciona datos')
    index = int(np.argmax(scores))
    return index, float(scores[index])
