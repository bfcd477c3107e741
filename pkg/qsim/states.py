"""
Estados de polarización de un qubit y la lámina de media onda (HWP).

Convención: el parámetro de rotación rho equivale al doble del ángulo físico
de la lámina (rho = 2 * theta_fisico). Todas las amplitudes son reales.
"""
import math
from dataclasses import dataclass

import numpy as np

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class PolarizationState:
    """Qubit de polarización con amplitudes reales a0 (|H>) y a1 (|V>)."""

    a0: float
    a1: float

    def is_normalized(self, tol: float = NORM_TOLERANCE) -> bool:
        return abs(self.a0 ** 2 + self.a1 ** 2 - 1.0) <= tol


H = PolarizationState(1.0, 0.0)
V = PolarizationState(0.0, 1.0)


def hwp_matrix(rho: float) -> np.ndarray:
    """Matriz real de la HWP con parámetro de rotación rho."""
    c, s = math.cos(rho), math.sin(rho)
    return np.array([[c, s], [s, -c]])


def hwp_apply(state: PolarizationState, rho: float) -> PolarizationState:
    """Aplicar HWP(rho). La operación es una involución."""
    c, s = math.cos(rho), math.sin(rho)
    return PolarizationState(
        state.a0 * c + state.a1 * s,
        state.a0 * s - state.a1 * c,
    )


def encode(x: float) -> PolarizationState:
    """Codificar el ángulo x como cos x|H> + sin x|V>."""
    return hwp_apply(H, x)
