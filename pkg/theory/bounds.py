"""
Geometría de las líneas de clasificación y cotas de precisión máxima.

Un punto codificado en el ángulo x cae sobre la línea y + k x = 0 cuando
tan(x) = -k, así que el ángulo de la línea es gamma = atan(-k) mod pi.
"""
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import InvalidProbabilityError, LengthMismatchError
from datasets.patterns import PATTERNS

VERTICAL = math.inf
SINGULAR_TOLERANCE = 1e-12


@dataclass(frozen=True)
class LinePair:
    """Dos líneas de clasificación por el origen: pendientes k y ángulos gamma en [0, pi)."""

    k1: float
    k2: float
    gamma1: float
    gamma2: float

    @property
    def perpendicular(self) -> bool:
        return abs(included_angle(self) - math.pi / 2) < 1e-9


def _line_angle(k: float) -> float:
    if math.isinf(k):
        return math.pi / 2
    return math.atan(-k) % math.pi


def _ratio(num: float, den: float) -> float:
    if abs(den) <= SINGULAR_TOLERANCE:
        return VERTICAL
    return num / den


def _pair(k1: float, k2: float) -> LinePair:
    return LinePair(k1=k1, k2=k2, gamma1=_line_angle(k1), gamma2=_line_angle(k2))


def vqc_lines(rho: float) -> LinePair:
    """Líneas del VQC; siempre perpendiculares."""
    k1 = _ratio(math.sin(rho + math.pi / 4), math.sin(rho - math.pi / 4))
    k2 = _ratio(-math.sin(rho - math.pi / 4), math.sin(rho + math.pi / 4))
    return _pair(k1, k2)


def nevqc_lines(rho1: float, rho2: float) -> LinePair:
    """Líneas del NEVQC: k1 = cot(rho1 - rho2), k2 = cot(rho1 + rho2)."""
    k1 = _ratio(math.cos(rho1 - rho2), math.sin(rho1 - rho2))
    k2 = _ratio(math.cos(rho1 + rho2), math.sin(rho1 + rho2))
    return _pair(k1, k2)


def line_angles(pair: LinePair) -> tuple:
    return (pair.gamma1, pair.gamma2)


def included_angle(pair: LinePair) -> float:
    """Ángulo agudo entre las dos líneas, en [0, pi/2]."""
    d = abs(pair.gamma1 - pair.gamma2) % math.pi
    return min(d, math.pi - d)


def max_accuracy(delta_beta: float, delta_gamma: float) -> float:
    """Precisión máxima alcanzable con líneas de ángulo delta_gamma sobre un patrón delta_beta."""
    return 1.0 - abs(delta_beta - delta_gamma) / math.pi


def nevqc_optimal_rho2(delta_beta: float) -> float:
    """rho2 cuyo ángulo incluido iguala delta_beta."""
    return delta_beta / 2


def nevqc_rho2_candidates(delta_beta: float) -> tuple:
    """Las dos orientaciones con el ángulo incluido delta_beta.

    Con rho2 = delta_beta / 2 la región +1 tiene ancho pi - delta_beta y
    con rho2 + pi/2 tiene ancho delta_beta; cuál sirve depende de qué
    segmento del patrón lleva la etiqueta +1.
    """
    rho2 = nevqc_optimal_rho2(delta_beta)
    return (rho2, rho2 + math.pi / 2)


def bound_table() -> list:
    """Cotas por patrón incorporado para VQC y NEVQC."""
    rows = []
    for pattern in PATTERNS.values():
        rho2 = nevqc_optimal_rho2(pattern.delta_beta)
        rows.append({
            'pattern': pattern.id,
            'delta_beta': pattern.delta_beta,
            'vqc_bound': max_accuracy(pattern.delta_beta, math.pi / 2),
            'nevqc_rho2': rho2,
            'nevqc_bound': max_accuracy(
                pattern.delta_beta, included_angle(nevqc_lines(0.0, rho2))
            ),
        })
    return rows


def _check_probability(value: float):
    if not -1e-12 <= value <= 1.0 + 1e-12:
        raise InvalidProbabilityError(f'Probabilidad fuera de [0, 1]: {value}')


def statistical_fidelity(p: float, q: float) -> float:
    """Traslape estadístico al cuadrado de dos distribuciones binarias."""
    _check_probability(p)
    _check_probability(q)
    p = min(max(p, 0.0), 1.0)
    q = min(max(q, 0.0), 1.0)
    return (math.sqrt(p * q) + math.sqrt((1.0 - p) * (1.0 - q))) ** 2


def infidelity(p: float, q: float) -> float:
    return 1.0 - statistical_fidelity(p, q)


def mean_abs_error(a, b) -> float:
    """Error absoluto medio entre dos series de igual largo."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise LengthMismatchError(f'Series de largo distinto: {a.size} y {b.size}')
    if a.size == 0:
        raise LengthMismatchError('Las series no pueden estar vacías')
    return float(np.mean(np.abs(a - b)))
