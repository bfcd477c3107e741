"""
Árbol CART binario con impureza de Gini y cortes paralelos a los ejes.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from committee.base import CommitteeMember, MemberKind
from core.exceptions import EmptyDataError


@dataclass
class TreeNode:
    depth: int
    label: int
    feature: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional['TreeNode'] = None
    right: Optional['TreeNode'] = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    def max_depth(self) -> int:
        if self.is_leaf:
            return self.depth
        return max(self.left.max_depth(), self.right.max_depth())


def gini(y) -> float:
    if len(y) == 0:
        return 0.0
    p = float(np.mean(np.asarray(y) > 0))
    return 1.0 - p ** 2 - (1.0 - p) ** 2


def majority(y) -> int:
    """Etiqueta mayoritaria; el empate va a +1."""
    return 1 if np.sum(y) >= 0 else -1


def best_split(X, y):
    """(feature, threshold, impureza ponderada) del mejor corte, o None si no hay corte."""
    best = None
    n = len(y)
    for feature in range(X.shape[1]):
        values = np.unique(X[:, feature])
        for threshold in (values[:-1] + values[1:]) / 2:
            mask = X[:, feature] <= threshold
            score = (mask.sum() * gini(y[mask]) + (~mask).sum() * gini(y[~mask])) / n
            if best is None or score < best[2]:
                best = (feature, float(threshold), score)
    return best


class DecisionTree(CommitteeMember):
    kind = MemberKind.TREE7

    def __init__(self, max_depth: int = 7):
        self.max_depth = max_depth

    def _grow(self, X, y, depth: int) -> TreeNode:
        node = TreeNode(depth=depth, label=majority(y))
        if depth >= self.max_depth or len(y) < 2 or gini(y) == 0.0:
            return node
        split = best_split(X, y)
        if split is None:
            return node
        node.feature, node.threshold, _ = split
        mask = X[:, node.feature] <= node.threshold
        node.left = self._grow(X[mask], y[mask], depth + 1)
        node.right = self._grow(X[~mask], y[~mask], depth + 1)
        return node

    def fit(self, X, y) -> 'DecisionTree':
        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float)
        if len(y) == 0:
            raise EmptyDataError('El árbol necesita al menos un dato')
        self.root = self._grow(X, y, 0)
        return self

    def _predict_one(self, row) -> int:
        node = self.root
        while not node.is_leaf:
            node = node.left if row[node.feature] <= node.threshold else node.right
        return node.label

    def predict(self, X) -> np.ndarray:
        return np.array([self._predict_one(row) for row in np.atleast_2d(X)])
