"""
Optimizador Adam con corrección de sesgo.
"""
from dataclasses import dataclass

import numpy as np


@dataclass
class AdamState:
    """Momentos de primer y segundo orden y número de paso."""

    m: np.ndarray
    v: np.ndarray
    t: int = 0

    @classmethod
    def zeros(cls, n_params: int) -> 'AdamState':
        return cls(m=np.zeros(n_params), v=np.zeros(n_params), t=0)

    def copy(self) -> 'AdamState':
        return AdamState(m=self.m.copy(), v=self.v.copy(), t=self.t)


def adam_step(state: AdamState, params, grads, config):
    """Aplicar un paso de Adam y retornar (params, state) nuevos."""
    grads = np.asarray(grads, dtype=float)
    t = state.t + 1
    m = config.adam_beta1 * state.m + (1 - config.adam_beta1) * grads
    v = config.adam_beta2 * state.v + (1 - config.adam_beta2) * grads ** 2
    m_hat = m / (1 - config.adam_beta1 ** t)
    v_hat = v / (1 - config.adam_beta2 ** t)
    values = params.as_array() - config.learning_rate * m_hat / (np.sqrt(v_hat) + config.adam_eps)
    return params.with_values(values), AdamState(m=m, v=v, t=t)
