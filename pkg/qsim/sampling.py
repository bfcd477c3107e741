"""
Muestreo de cuentas de coincidencia con disparos finitos.

Cada disparo cae en {plus, minus, descartado}; el generador se pasa
explícitamente y no debe compartirse entre llamadas concurrentes.
"""
from dataclasses import dataclass

import numpy as np

from core.exceptions import InvalidProbabilityError, ZeroCountsError

PROBABILITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class CountRecord:
    """Cuentas de una evaluación: N13/N23 (VQC) o N45/N46 (NEVQC)."""

    n_plus: int
    n_minus: int
    shots: int

    @property
    def total(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def vanished(self) -> bool:
        return self.total == 0


def sample_counts(p_plus: float, p_minus: float, shots: int, rng) -> CountRecord:
    """Muestrear `shots` ensayos multinomiales con probabilidades (p_plus, p_minus, resto)."""
    if shots < 0:
        raise InvalidProbabilityError('El número de disparos no puede ser negativo')
    if p_plus < -PROBABILITY_TOLERANCE or p_minus < -PROBABILITY_TOLERANCE:
        raise InvalidProbabilityError(
            f'Probabilidades negativas: p_plus={p_plus}, p_minus={p_minus}'
        )
    if p_plus + p_minus > 1.0 + PROBABILITY_TOLERANCE:
        raise InvalidProbabilityError(
            f'p_plus + p_minus excede 1: {p_plus + p_minus}'
        )

    p_plus = min(max(p_plus, 0.0), 1.0)
    p_minus = min(max(p_minus, 0.0), 1.0 - p_plus)
    discarded = max(1.0 - p_plus - p_minus, 0.0)
    n_plus, n_minus, _ = rng.multinomial(shots, [p_plus, p_minus, discarded])
    return CountRecord(n_plus=int(n_plus), n_minus=int(n_minus), shots=int(shots))


def expectation_vqc(counts: CountRecord) -> float:
    """<Z> = (N13 - N23) / (N13 + N23)."""
    if counts.total == 0:
        raise ZeroCountsError('Registro VQC sin coincidencias')
    return (counts.n_plus - counts.n_minus) / counts.total


def expectation_nevqc(counts: CountRecord) -> float:
    """<Z> = (N45 - N46) / (N45 + N46); 0 cuando no hubo eventos post-seleccionados."""
    if counts.vanished:
        return 0.0
    return (counts.n_plus - counts.n_minus) / counts.total


def binomial_sigma(p: float, shots: int) -> float:
    """Desviación estándar de la fracción observada en `shots` ensayos."""
    return float(np.sqrt(p * (1.0 - p) / shots))
