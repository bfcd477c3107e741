"""
Estimador de expectativas: backend analítico o muestreado con disparos finitos.

Cada estimación en el camino de entrenamiento suma una evaluación al
contador, con cualquiera de los dos backends, para que ambos compartan el
mismo eje de costo.
"""
import numpy as np

from classifier.params import Backend, EvalCounter, TrainConfig
from qsim.circuits import ClassifierKind, analytic_expectation, nevqc_forward, vqc_prob0
from qsim.sampling import expectation_nevqc, expectation_vqc, sample_counts


class ExpectationEstimator:
    """Evalúa <Z(x, params)> y P0 del VQC, llevando la cuenta del costo."""

    def __init__(self, backend=Backend.ANALYTIC, shots=None, rng=None, counter=None):
        self.backend = Backend(backend)
        self.shots = shots
        self.rng = rng if rng is not None else np.random.default_rng()
        self.counter = counter if counter is not None else EvalCounter()

    @property
    def is_sampled(self) -> bool:
        return self.backend == Backend.SAMPLED

    def _shots(self, kind) -> int:
        if self.shots is not None:
            return self.shots
        return TrainConfig().shots_for(kind)

    def _count(self, count: bool, n: int = 1):
        if count:
            self.counter.add_evaluations(n)

    def expectation(self, params, x: float, count: bool = True) -> float:
        """Estimar <Z> en (x, params)."""
        self._count(count)
        if not self.is_sampled:
            return analytic_expectation(params.kind, x, params.values)

        shots = self._shots(params.kind)
        if params.kind == ClassifierKind.VQC:
            p0 = float(vqc_prob0(x, params.rho))
            return expectation_vqc(sample_counts(p0, 1.0 - p0, shots, self.rng))

        joint = nevqc_forward(x, params.rho1, params.rho2, params.kind.interference)
        counts = sample_counts(
            joint.keep_prob * joint.p_d0_a0,
            joint.keep_prob * joint.p_d1_a0,
            shots,
            self.rng,
        )
        return expectation_nevqc(counts)

    def expectations(self, params, xs, count: bool = True) -> np.ndarray:
        """Estimar <Z> para cada x en orden."""
        if not self.is_sampled:
            self._count(count, len(xs))
            return np.asarray(analytic_expectation(params.kind, np.asarray(xs), params.values))
        return np.array([self.expectation(params, x, count) for x in xs], dtype=float)

    def vqc_prob0(self, params, x: float, count: bool = True) -> float:
        """Estimar P0 del VQC; con disparos es la fracción N13 / disparos."""
        self._count(count)
        p0 = float(vqc_prob0(x, params.rho))
        if not self.is_sampled:
            return p0
        shots = self._shots(params.kind)
        counts = sample_counts(p0, 1.0 - p0, shots, self.rng)
        return counts.n_plus / shots
