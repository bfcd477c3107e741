import numpy as np

from committee.base import CommitteeMember, MemberKind
from core.exceptions import ConfigError, EmptyDataError


class KNearest(CommitteeMember):
    """Voto mayoritario de los k vecinos euclidianos; empates de distancia por índice menor."""

    kind = MemberKind.KNN3

    def __init__(self, k: int = 3):
        if k < 1:
            raise ConfigError('k debe ser >= 1')
        self.k = k

    def fit(self, X, y) -> 'KNearest':
        X = np.asarray(X, dtype=float)
        if len(X) == 0:
            raise EmptyDataError('KNN necesita al menos un dato')
        self.X = X
        self.y = np.asarray(y, dtype=float)
        return self

    def neighbors(self, point) -> np.ndarray:
        distances = np.sum((self.X - np.asarray(point, dtype=float)) ** 2, axis=1)
        return np.argsort(distances, kind='stable')[:self.k]

    def predict(self, X) -> np.ndarray:
        votes = [np.sum(self.y[self.neighbors(row)]) for row in np.atleast_2d(X)]
        return np.where(np.asarray(votes) >= 0, 1, -1)
