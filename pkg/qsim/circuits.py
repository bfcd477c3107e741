"""
Modelos analíticos de los circuitos VQC y NEVQC / NEVQC*.

Las funciones analíticas aceptan escalares o arreglos numpy de ángulos.
"""
from dataclasses import dataclass

import numpy as np
from django.db import models

from qsim.states import encode, hwp_apply, hwp_matrix

# Probabilidad del ancilla en |0> bajo la cual se declara vanishment.
VANISHMENT_THRESHOLD = 1e-15

# Éxito de la post-selección en el PBS (un fotón por puerto).
PBS_KEEP_PROB = 0.5


class ClassifierKind(models.TextChoices):
    VQC = ('vqc', 'VQC')
    NEVQC = ('nevqc', 'NEVQC')
    NEVQC_STAR = ('nevqc_star', 'NEVQC*')

    @property
    def n_params(self) -> int:
        return 1 if self == ClassifierKind.VQC else 2

    @property
    def interference(self) -> bool:
        return self == ClassifierKind.NEVQC_STAR


@dataclass(frozen=True)
class NevqcJoint:
    """Distribución conjunta dato/ancilla tras la post-selección en el PBS."""

    p_d0_a0: float
    p_d1_a0: float
    keep_prob: float

    @property
    def p0_star(self) -> float:
        return self.p_d0_a0 + self.p_d1_a0

    @property
    def vanished(self) -> bool:
        return self.p0_star < VANISHMENT_THRESHOLD


def vqc_prob0(x, theta):
    """Probabilidad de |0> a la salida del VQC: cos^2(theta - x)."""
    return np.cos(theta - x) ** 2


def _data_amplitudes(x: float, rho1: float):
    data = hwp_apply(encode(x), rho1)
    return data.a0, data.a1


def _forward_pure(a0: float, a1: float, rho2: float) -> np.ndarray:
    """NEVQC*: el PBS con interferencia deja el estado puro a0|00> + a1|11>."""
    norm = np.hypot(a0, a1)
    psi = np.array([a0, 0.0, 0.0, a1]) / norm
    out = np.kron(np.eye(2), hwp_matrix(rho2)) @ psi
    return out ** 2


def _forward_mixed(a0: float, a1: float, rho2: float) -> np.ndarray:
    """NEVQC: sin interferencia el PBS deja la mezcla a0^2|00><00| + a1^2|11><11|."""
    weight = a0 ** 2 + a1 ** 2
    rho = np.diag([a0 ** 2, 0.0, 0.0, a1 ** 2]) / weight
    unitary = np.kron(np.eye(2), hwp_matrix(rho2))
    return np.diag(unitary @ rho @ unitary.T)


def nevqc_forward(x: float, rho1: float, rho2: float, interference: bool) -> NevqcJoint:
    """Propagar el dato y el ancilla por el circuito NEVQC (o NEVQC*).

    Los índices de la base son 2 * dato + ancilla; se conservan los eventos
    con el ancilla en |0>.
    """
    a0, a1 = _data_amplitudes(x, rho1)
    keep_prob = (a0 ** 2 + a1 ** 2) * PBS_KEEP_PROB
    probs = _forward_pure(a0, a1, rho2) if interference else _forward_mixed(a0, a1, rho2)
    return NevqcJoint(
        p_d0_a0=float(probs[0]),
        p_d1_a0=float(probs[2]),
        keep_prob=float(keep_prob),
    )


def nevqc_p0_star(x, rho1, rho2):
    """Forma cerrada de P0*: cos^2(rho2) A0^2 + sin^2(rho2) A1^2."""
    return (np.cos(rho2) * np.cos(rho1 - x)) ** 2 + (np.sin(rho2) * np.sin(rho1 - x)) ** 2


def _as_output(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def analytic_expectation(kind, x, params):
    """<Z> con infinitos disparos.

    `params` es la tupla de parámetros de rotación del modelo: (rho,) para
    VQC y (rho1, rho2) para NEVQC. En vanishment retorna 0.
    """
    kind = ClassifierKind(kind)
    x = np.asarray(x, dtype=float)
    if kind == ClassifierKind.VQC:
        (rho,) = params
        return _as_output(np.cos(2 * rho - 2 * x))

    rho1, rho2 = params
    plus = (np.cos(rho2) * np.cos(rho1 - x)) ** 2
    minus = (np.sin(rho2) * np.sin(rho1 - x)) ** 2
    p0_star = plus + minus
    vanished = p0_star < VANISHMENT_THRESHOLD
    safe = np.where(vanished, 1.0, p0_star)
    return _as_output(np.where(vanished, 0.0, (plus - minus) / safe))
