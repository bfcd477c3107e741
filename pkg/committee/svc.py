"""
SVC de margen suave con kernel RBF entrenado por SMO.

Convención de decisión: f(x) = sum_j alpha_j y_j K(x_j, x) - b.
"""
import logging

import numpy as np

from committee.base import CommitteeMember, MemberKind, require_both_classes, sign_of
from core.exceptions import ConfigError

logger = logging.getLogger(__name__)


def rbf_kernel(A, B, gamma: float) -> np.ndarray:
    """K(u, v) = exp(-gamma * ||u - v||^2) para cada par de filas."""
    A = np.atleast_2d(A)
    B = np.atleast_2d(B)
    sq = np.sum((A[:, None, :] - B[None, :, :]) ** 2, axis=2)
    return np.exp(-gamma * sq)


def dual_objective(alphas, y, K) -> float:
    """W(alpha) = sum alpha - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij."""
    ay = alphas * y
    return float(np.sum(alphas) - 0.5 * ay @ K @ ay)


def scale_gamma(X) -> float:
    """gamma = 1 / (2 var) de las características; 1.0 si la varianza es nula."""
    var = float(np.var(X))
    return 1.0 / (2.0 * var) if var > 0 else 1.0


class SvcRbf(CommitteeMember):
    kind = MemberKind.SVC_RBF

    def __init__(self, C: float = 1.0, gamma=None, tol: float = 1e-3,
                 eps: float = 1e-6, max_passes: int = 10_000):
        if C <= 0:
            raise ConfigError('C debe ser positivo')
        self.C = C
        self.gamma = gamma
        self.tol = tol
        self.eps = eps
        self.max_passes = max_passes
        self.objective_trace = []

    def _errors(self) -> np.ndarray:
        return (self.alphas * self.y) @ self.K - self.b - self.y

    def _take_step(self, i1: int, i2: int) -> bool:
        if i1 == i2:
            return False
        C, K, y = self.C, self.K, self.y
        alph1, alph2 = self.alphas[i1], self.alphas[i2]
        y1, y2 = y[i1], y[i2]
        errors = self._errors()
        E1, E2 = errors[i1], errors[i2]
        s = y1 * y2

        if y1 != y2:
            L, H = max(0.0, alph2 - alph1), min(C, C + alph2 - alph1)
        else:
            L, H = max(0.0, alph1 + alph2 - C), min(C, alph1 + alph2)
        if L == H:
            return False

        k11, k12, k22 = K[i1, i1], K[i1, i2], K[i2, i2]
        eta = 2 * k12 - k11 - k22
        if eta < 0:
            a2 = float(np.clip(alph2 - y2 * (E1 - E2) / eta, L, H))
        else:
            trial = self.alphas.copy()
            trial[i1], trial[i2] = alph1 + s * (alph2 - L), L
            low = dual_objective(trial, y, K)
            trial[i1], trial[i2] = alph1 + s * (alph2 - H), H
            high = dual_objective(trial, y, K)
            if low > high + self.eps:
                a2 = L
            elif low < high - self.eps:
                a2 = H
            else:
                a2 = alph2

        if a2 < 1e-8:
            a2 = 0.0
        elif a2 > C - 1e-8:
            a2 = C
        if abs(a2 - alph2) < self.eps * (a2 + alph2 + self.eps):
            return False

        a1 = alph1 + s * (alph2 - a2)
        if a1 < 1e-8:
            a1 = 0.0
        elif a1 > C - 1e-8:
            a1 = C

        b1 = E1 + y1 * (a1 - alph1) * k11 + y2 * (a2 - alph2) * k12 + self.b
        b2 = E2 + y1 * (a1 - alph1) * k12 + y2 * (a2 - alph2) * k22 + self.b
        if 0 < a1 < C:
            self.b = b1
        elif 0 < a2 < C:
            self.b = b2
        else:
            self.b = (b1 + b2) / 2

        self.alphas[i1], self.alphas[i2] = a1, a2
        self.objective_trace.append(dual_objective(self.alphas, y, K))
        return True

    def _examine(self, i2: int) -> bool:
        y2, alph2 = self.y[i2], self.alphas[i2]
        errors = self._errors()
        r2 = errors[i2] * y2
        if not ((r2 < -self.tol and alph2 < self.C) or (r2 > self.tol and alph2 > 0)):
            return False

        free = np.flatnonzero((self.alphas > 0) & (self.alphas < self.C))
        if len(free) > 1:
            i1 = int(free[np.argmax(np.abs(errors[free] - errors[i2]))])
            if self._take_step(i1, i2):
                return True
        for i1 in free:
            if self._take_step(int(i1), i2):
                return True
        for i1 in range(len(self.y)):
            if self._take_step(i1, i2):
                return True
        return False

    def fit(self, X, y) -> 'SvcRbf':
        """Resolver el dual por SMO hasta que no queden violaciones KKT sobre `tol`."""
        X = np.asarray(X, dtype=float)
        y = np.asarray(y, dtype=float)
        require_both_classes(y, 'SVC')
        self.X, self.y = X, y
        self.gamma_ = self.gamma if self.gamma is not None else scale_gamma(X)
        self.K = rbf_kernel(X, X, self.gamma_)
        self.alphas = np.zeros(len(y))
        self.b = 0.0
        self.objective_trace = [0.0]

        changed, examine_all, passes = 0, True, 0
        while (changed > 0 or examine_all) and passes < self.max_passes:
            changed = 0
            candidates = range(len(y)) if examine_all else np.flatnonzero(
                (self.alphas > 0) & (self.alphas < self.C)
            )
            for i2 in candidates:
                changed += self._examine(int(i2))
            if examine_all:
                examine_all = False
            elif changed == 0:
                examine_all = True
            passes += 1
        if passes >= self.max_passes:
            logger.warning('SMO alcanzó %s pasadas sin converger', self.max_passes)
        return self

    @property
    def objective(self) -> float:
        return dual_objective(self.alphas, self.y, self.K)

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.alphas > 0)

    def decision_function(self, X) -> np.ndarray:
        return (self.alphas * self.y) @ rbf_kernel(self.X, X, self.gamma_) - self.b

    def predict(self, X) -> np.ndarray:
        return sign_of(self.decision_function(X))
