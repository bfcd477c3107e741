"""
Discriminante lineal de Fisher para dos clases.
"""
import numpy as np

from committee.base import CommitteeMember, MemberKind, require_both_classes, sign_of

RIDGE = 1e-9


class FisherLda(CommitteeMember):
    """w = S_w^-1 (mu+ - mu-), umbral en el punto medio de las medias proyectadas."""

    kind = MemberKind.LDA

    def __init__(self, ridge: float = RIDGE):
        self.ridge = ridge

    def fit(self, X, y) -> 'FisherLda':
        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float)
        require_both_classes(y, 'LDA')
        pos, neg = X[y > 0], X[y < 0]
        self.mu_pos = pos.mean(axis=0)
        self.mu_neg = neg.mean(axis=0)
        centered = np.vstack([pos - self.mu_pos, neg - self.mu_neg])
        scatter = centered.T @ centered + self.ridge * np.eye(X.shape[1])
        self.w = np.linalg.solve(scatter, self.mu_pos - self.mu_neg)
        self.threshold = float(self.w @ (self.mu_pos + self.mu_neg) / 2)
        return self

    def decision_function(self, X) -> np.ndarray:
        return np.atleast_2d(X) @ self.w - self.threshold

    def predict(self, X) -> np.ndarray:
        return sign_of(self.decision_function(X))
