"""Figures of merit for two-qubit density matrices"""

import cmath
import logging
import math
from typing import Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator
from scipy import linalg

from hybrid_swap.fock import DensityMatrix, FockVector, partial_transpose

logger = logging.getLogger(__name__)

RANGE_TOLERANCE = 1e-10
NEGATIVE_EIGENVALUE_CUTOFF = -1e-12

_BELL_STATES = {
    "phi+": np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0),
    "phi-": np.array([1.0, 0.0, 0.0, -1.0]) / math.sqrt(2.0),
    "psi+": np.array([0.0, 1.0, 1.0, 0.0]) / math.sqrt(2.0),
    "psi-": np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0),
}


def bell_state(name: str) -> np.ndarray:
    """Bell vector by name: phi+, phi-, psi+ or psi-"""
    key = name.lower().replace("_", "").replace("plus", "+").replace("minus", "-")
    if key not in _BELL_STATES:
        raise ValueError(f"Unknown Bell state '{name}'. Expected one of {sorted(_BELL_STATES)}")
    return _BELL_STATES[key].astype(complex)


PHI_PLUS = bell_state("phi+")


class MeasureSet(BaseModel):
    """Negativity, fidelity, linear entropy and success probability of one run"""

    model_config = ConfigDict(frozen=True)

    dim: int = Field(4, ge=1, description="Hilbert space dimension d bounding the linear entropy")
    negativity: float = Field(..., description="Entanglement negativity in [0, 1]")
    fidelity: float = Field(..., description="Fidelity to the pure target in [0, 1]")
    linear_entropy: float = Field(..., description="1 - Tr[rho^2] in [0, 1 - 1/d]")
    success_prob: float = Field(..., description="Probability of the vacuum outcome in [0, 1]")

    @field_validator("negativity", "fidelity", "success_prob")
    @classmethod
    def _unit_interval(cls, value: float, info: ValidationInfo) -> float:
        return _clip(value, 0.0, 1.0, info.field_name)

    @field_validator("linear_entropy")
    @classmethod
    def _entropy_range(cls, value: float, info: ValidationInfo) -> float:
        dim = info.data.get("dim", 4) if info.data else 4
        return _clip(value, 0.0, 1.0 - 1.0 / dim, info.field_name)


def _clip(value: float, low: float, high: float, name: str) -> float:
    if not math.isfinite(value) or value < low - RANGE_TOLERANCE or value > high + RANGE_TOLERANCE:
        raise ValueError(f"{name}={value} outside [{low}, {high}]")
    return min(max(value, low), high)


def _as_density(rho: Union[DensityMatrix, np.ndarray]) -> DensityMatrix:
    if isinstance(rho, DensityMatrix):
        return rho
    matrix = np.asarray(rho, dtype=complex)
    return DensityMatrix(dims=(matrix.shape[0],), entries=matrix)


def fidelity(rho: Union[DensityMatrix, np.ndarray], target: Sequence[complex]) -> float:
    """<sigma|rho|sigma> for a pure target sigma"""
    rho = _as_density(rho)
    sigma = np.asarray(target, dtype=complex).ravel()
    if sigma.size != rho.dim:
        raise ValueError(f"Target of length {sigma.size} does not match density matrix dimension {rho.dim}")
    sigma = sigma / np.linalg.norm(sigma)
    return float(np.vdot(sigma, rho.entries @ sigma).real)


def negativity(rho: Union[DensityMatrix, np.ndarray]) -> float:
    """-2 times the sum of the negative eigenvalues of the partial transpose (2x2 systems)"""
    rho = _as_density(rho)
    if rho.dim != 4:
        raise ValueError(f"Negativity is defined here for two qubits, got dimension {rho.dim}")
    eigenvalues = linalg.eigvalsh(partial_transpose(rho, 1, (2, 2)).entries)
    negative = eigenvalues[eigenvalues < NEGATIVE_EIGENVALUE_CUTOFF]
    return float(-2.0 * np.sum(negative))


def linear_entropy(rho: Union[DensityMatrix, np.ndarray]) -> float:
    rho = _as_density(rho)
    return float(1.0 - np.sum(np.abs(rho.entries) ** 2))


def intensity_difference_expectation(
    state: Union[FockVector, complex], beta: float, theta: float
) -> float:
    """
    Balanced homodyne signal 2 beta <x_theta> with x_theta = (b e^{-i theta} + b† e^{i theta}) / 2.

    `state` is either a Fock vector or the complex label of a coherent state.
    """
    if beta < 0:
        raise ValueError(f"Local oscillator amplitude must be >= 0, got {beta}")
    mean_b = state.mean_annihilation() if isinstance(state, FockVector) else complex(state)
    return 2.0 * beta * (mean_b * cmath.exp(-1j * theta)).real


def evaluate_measures(
    rho: DensityMatrix, success_prob: float, target: Optional[Sequence[complex]] = None
) -> MeasureSet:
    return MeasureSet(
        negativity=negativity(rho),
        fidelity=fidelity(rho, PHI_PLUS if target is None else target),
        linear_entropy=linear_entropy(rho),
        success_prob=success_prob,
        dim=rho.dim,
    )
