"""
Errores de dominio del simulador.

Todos heredan de ValueError: son entradas inválidas, no fallas del entorno.
La desaparición de probabilidad (vanishment) nunca es un error.
"""


class PhotonicError(ValueError):
    """Error base del simulador."""


class InvalidProbabilityError(PhotonicError):
    """Probabilidad negativa o suma mayor a uno fuera de la tolerancia."""


class ZeroCountsError(PhotonicError):
    """Registro de cuentas sin eventos donde se requiere al menos uno."""


class EmptyDataError(PhotonicError):
    """Conjunto de datos vacío donde se requiere al menos un elemento."""


class SingleClassError(PhotonicError):
    """Datos con una sola clase donde se requieren ambas."""


class PoolTooSmallError(PhotonicError):
    """El pool no alcanza para la semilla inicial más las rondas pedidas."""


class LengthMismatchError(PhotonicError):
    """Series de distinto largo."""


class ConfigError(PhotonicError):
    """Configuración inválida."""
