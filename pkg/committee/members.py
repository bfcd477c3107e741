"""
Comité de cuatro miembros para Query-by-Committee.
"""
import logging

import numpy as np

from committee.base import MemberKind, as_training_set, features_of
from committee.knn import KNearest
from committee.lda import FisherLda
from committee.svc import SvcRbf
from committee.tree import DecisionTree

logger = logging.getLogger(__name__)

MEMBER_CLASSES = {
    MemberKind.SVC_RBF: SvcRbf,
    MemberKind.KNN3: KNearest,
    MemberKind.LDA: FisherLda,
    MemberKind.TREE7: DecisionTree,
}


def build_member(kind):
    return MEMBER_CLASSES[MemberKind(kind)]()


class Committee:
    """Los miembros se reentrenan desde cero en cada `fit`."""

    def __init__(self, kinds=tuple(MemberKind)):
        self.kinds = tuple(MemberKind(kind) for kind in kinds)
        self.members = []

    def fit(self, points) -> 'Committee':
        X, y = as_training_set(points)
        self.members = [build_member(kind).fit(X, y) for kind in self.kinds]
        logger.debug('Comité entrenado con %s datos', len(points))
        return self

    def __len__(self):
        return len(self.kinds)

    def votes(self, xs) -> np.ndarray:
        """Matriz (miembros, puntos) de votos en {+1, -1}."""
        X = features_of(xs)
        return np.vstack([member.predict(X) for member in self.members])
