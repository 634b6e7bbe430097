"""Single-mode Fock vectors: coherent, vacuum and number states"""

import logging
import math

import numpy as np
from scipy import special, stats

from hybrid_swap.errors import TruncationError
from .base import FockVector

logger = logging.getLogger(__name__)

DEFAULT_EPSILON_TRUNC = 1e-12


def auto_truncation(max_amplitude: float) -> int:
    """Photon-number cutoff N = ceil(a^2 + 10a + 20) for the largest |amplitude| a in a circuit"""
    a = abs(max_amplitude)
    return int(math.ceil(a * a + 10.0 * a + 20.0))


def poisson_tail(alpha: complex, n_trunc: int) -> float:
    """Probability mass of |alpha> above n_trunc photons"""
    mean = abs(alpha) ** 2
    if mean == 0.0:
        return 0.0
    return float(stats.poisson.sf(n_trunc, mean))


def coherent_fock_vector(
    alpha: complex,
    n_trunc: int,
    epsilon_trunc: float = DEFAULT_EPSILON_TRUNC,
    strict: bool = True,
) -> FockVector:
    """
    Coherent state |alpha> truncated to photon numbers 0..n_trunc.

    Amplitudes are accumulated in log space with gammaln so that large n does
    not overflow n!. The cut-off Poisson mass is stored on the result.

    Raises:
        ValueError: if n_trunc is negative
        TruncationError: in strict mode, if the tail exceeds epsilon_trunc
    """
    if n_trunc < 0:
        raise ValueError(f"n_trunc must be >= 0, got {n_trunc}")

    alpha = complex(alpha)
    tail = poisson_tail(alpha, n_trunc)
    if tail > epsilon_trunc:
        message = f"Truncation n_trunc={n_trunc} leaves tail probability {tail:.3g} for |alpha|={abs(alpha):.4g}"
        if strict:
            raise TruncationError(message, tail_probability=tail, n_trunc=n_trunc)
        logger.warning(message)

    amplitudes = np.zeros(n_trunc + 1, dtype=complex)
    radius = abs(alpha)
    if radius == 0.0:
        amplitudes[0] = 1.0
    else:
        n = np.arange(n_trunc + 1)
        log_magnitude = -0.5 * radius ** 2 + n * math.log(radius) - 0.5 * special.gammaln(n + 1)
        amplitudes = np.exp(log_magnitude) * np.exp(1j * n * np.angle(alpha))

    return FockVector(amplitudes=amplitudes, tail_probability=tail)


def vacuum_fock_vector(n_trunc: int) -> FockVector:
    return number_fock_vector(0, n_trunc)


def number_fock_vector(n: int, n_trunc: int) -> FockVector:
    if not 0 <= n <= n_trunc:
        raise ValueError(f"Photon number {n} outside 0..{n_trunc}")
    amplitudes = np.zeros(n_trunc + 1, dtype=complex)
    amplitudes[n] = 1.0
    return FockVector(amplitudes=amplitudes)
