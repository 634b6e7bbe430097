"""Quadrature eigenstate amplitudes for homodyne projections"""

import cmath
import math

import numpy as np

PI_QUARTER_ROOT = math.pi ** -0.25


def homodyne_amplitude(x: float, theta: float, alpha: complex) -> complex:
    """
    <x_theta|alpha> for a Dirac-normalized quadrature eigenstate.

    A complex alpha enters through |alpha| and phi = arg(alpha); the result is
    pi^(-1/4) exp[-x^2/2 + sqrt(2) e^{i(phi-theta)} |alpha| x
    - e^{2i(phi-theta)} |alpha|^2 / 2 - |alpha|^2 / 2].
    """
    radius = abs(alpha)
    rotation = cmath.exp(1j * (cmath.phase(alpha) - theta)) if radius else 1.0
    exponent = (
        -0.5 * x * x
        + math.sqrt(2.0) * rotation * radius * x
        - 0.5 * rotation ** 2 * radius ** 2
        - 0.5 * radius ** 2
    )
    return PI_QUARTER_ROOT * cmath.exp(exponent)


def hermite_functions(x: float, dim: int) -> np.ndarray:
    """Normalized Hermite functions psi_0(x) .. psi_{dim-1}(x) by upward recurrence"""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    psi = np.zeros(dim)
    psi[0] = PI_QUARTER_ROOT * math.exp(-0.5 * x * x)
    if dim > 1:
        psi[1] = math.sqrt(2.0) * x * psi[0]
    for n in range(1, dim - 1):
        psi[n + 1] = math.sqrt(2.0 / (n + 1)) * x * psi[n] - math.sqrt(n / (n + 1)) * psi[n - 1]
    return psi


def homodyne_bra(x: float, theta: float, dim: int) -> np.ndarray:
    """Row functional n -> <x_theta|n> = e^{-i theta n} psi_n(x)"""
    n = np.arange(dim)
    return np.exp(-1j * theta * n) * hermite_functions(x, dim)
