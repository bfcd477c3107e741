"""
Curva de respuesta simulada de una HWP durante una rotación larga.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from core.exceptions import ConfigError
from qsim.sampling import sample_counts
from qsim.states import H, hwp_apply
from theory.bounds import statistical_fidelity

logger = logging.getLogger(__name__)

STEP_SIZE = 0.01 * math.pi


@dataclass
class CalibrationResult:
    angles: np.ndarray
    expected: np.ndarray
    observed: np.ndarray
    fidelities: np.ndarray

    @property
    def mean_fidelity(self) -> float:
        return float(np.mean(self.fidelities))

    @property
    def mean_infidelity(self) -> float:
        return 1.0 - self.mean_fidelity

    def rows(self) -> list:
        return [
            {'step': j, 'rho': rho, 'expected': e, 'observed': o, 'fidelity': f}
            for j, (rho, e, o, f) in enumerate(
                zip(self.angles, self.expected, self.observed, self.fidelities)
            )
        ]


def calibration_sweep(steps: int = 10000, shots: int = 2000, seed=None,
                      step_size: float = STEP_SIZE) -> CalibrationResult:
    """Rotar la HWP paso a paso sobre |H> y comparar P(H) medida con cos^2(rho)."""
    if steps < 1 or shots < 1:
        raise ConfigError('steps y shots deben ser >= 1')
    rng = np.random.default_rng(seed)
    angles = np.arange(steps) * step_size
    expected = np.empty(steps)
    observed = np.empty(steps)
    fidelities = np.empty(steps)
    for j, rho in enumerate(angles):
        p = hwp_apply(H, rho).a0 ** 2
        counts = sample_counts(p, 1.0 - p, shots, rng)
        expected[j] = p
        observed[j] = counts.n_plus / shots
        fidelities[j] = statistical_fidelity(p, observed[j])
    result = CalibrationResult(angles, expected, observed, fidelities)
    logger.info('Calibración: %s pasos, infidelidad media %.5f', steps, result.mean_infidelity)
    return result
