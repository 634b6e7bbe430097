"""Parameter and result models for the swapping protocol"""

import math
from typing import Dict, Iterator, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hybrid_swap.fock import MultiModeState


class ProtocolParams(BaseModel):
    """All physical knobs of one protocol run"""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., ge=0.0, allow_inf_nan=False, description="Coherent amplitude of both hybrid states")
    T: float = Field(..., gt=0.0, le=1.0, description="Transmission of the first lossy channel")
    delta: float = Field(0.0, ge=0.0, description="Loss mismatch; the second channel transmits T - delta")
    x: float = Field(0.0, allow_inf_nan=False, description="Homodyne outcome on mode D")
    theta: float = Field(math.pi / 2, allow_inf_nan=False, description="Homodyne quadrature angle")
    phase_corrected: bool = Field(True, description="Remove the outcome-dependent local phases")
    swap_channels: bool = Field(False, description="Place the mismatch on channel B instead of D")
    n_trunc_branches: Optional[int] = Field(None, ge=0, description="Fixed environment cutoff; None picks it from epsilon_branch")
    epsilon_branch: float = Field(1e-14, gt=0.0, lt=1.0, description="Environment weight left out of the branch series")
    n_trunc: Optional[int] = Field(None, ge=1, description="Fock cutoff for the circuit oracle; None picks it automatically")
    epsilon_trunc: float = Field(1e-12, gt=0.0, lt=1.0, description="Allowed coherent tail probability in the oracle")
    strict_truncation: bool = Field(True, description="Raise TruncationError when the oracle cutoff leaves more than epsilon_trunc")

    @model_validator(mode="after")
    def _check_mismatch(self) -> "ProtocolParams":
        if self.delta >= self.T:
            raise ValueError(f"delta={self.delta} must be smaller than T={self.T}")
        return self

    @property
    def transmission_b(self) -> float:
        return self.T - self.delta if self.swap_channels else self.T

    @property
    def transmission_d(self) -> float:
        return self.T if self.swap_channels else self.T - self.delta

    @property
    def t_plus(self) -> float:
        return math.sqrt(self.transmission_b) + math.sqrt(self.transmission_d)

    @property
    def t_minus(self) -> float:
        return math.sqrt(self.transmission_b) - math.sqrt(self.transmission_d)

    def with_updates(self, **changes) -> "ProtocolParams":
        """Validated copy with some fields replaced"""
        return ProtocolParams(**{**self.model_dump(), **changes})


class HeraldParams(BaseModel):
    """Knobs of the heralded hybrid-state source"""

    model_config = ConfigDict(frozen=True)

    p_c: float = Field(..., ge=0.0, le=1.0, description="Probability of a single photon in mode p from the atomic source")
    eta: float = Field(..., ge=0.0, le=1.0, description="Down-conversion efficiency")
    alpha: float = Field(..., ge=0.0, allow_inf_nan=False, description="Injected coherent amplitude")
    herald_outcome: int = Field(1, ge=0, description="Photon count detected in mode p")
    n_trunc: Optional[int] = Field(None, ge=1, description="Fock cutoff for mode B; None picks it automatically")


class BranchDecomposition(BaseModel):
    """
    Environment-indexed decomposition of the post-measurement AC state.

    Branch (n, m) is weights[n, m] * vectors[n, m], where n and m are the photon
    numbers left in the two loss environments and each vector lives on the basis
    |00>, |01>, |10>, |11> of modes A and C. Distinct branches are orthogonal.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    weights: np.ndarray = Field(..., description="Real branch weight factors, shape (n_max+1, m_max+1)")
    vectors: np.ndarray = Field(..., description="Complex AC 4-vectors, shape (n_max+1, m_max+1, 4)")
    norm_constant: float = Field(1.0, gt=0.0, description="Factor applied to the weights by normalization")

    @field_validator("weights", mode="before")
    @classmethod
    def _check_weights(cls, value):
        weights = np.array(value, dtype=float)
        if weights.ndim != 2 or weights.size == 0:
            raise ValueError(f"weights must be a non-empty 2-d array, got shape {weights.shape}")
        if not np.all(np.isfinite(weights)):
            raise ValueError("weights contain NaN or Inf")
        weights.flags.writeable = False
        return weights

    @field_validator("vectors", mode="before")
    @classmethod
    def _check_vectors(cls, value):
        vectors = np.array(value, dtype=complex)
        if vectors.ndim != 3 or vectors.shape[-1] != 4:
            raise ValueError(f"vectors must have shape (n, m, 4), got {vectors.shape}")
        if not np.all(np.isfinite(vectors)):
            raise ValueError("vectors contain NaN or Inf")
        vectors.flags.writeable = False
        return vectors

    @model_validator(mode="after")
    def _check_shapes(self) -> "BranchDecomposition":
        if self.vectors.shape[:2] != self.weights.shape:
            raise ValueError(f"vectors shape {self.vectors.shape} does not match weights shape {self.weights.shape}")
        return self

    @property
    def shape(self) -> Tuple[int, int]:
        return self.weights.shape

    @property
    def total_weight(self) -> float:
        """sum over (n, m) of |w_nm|^2 ||v_nm||^2"""
        return float(np.sum(self.weights ** 2 * np.sum(np.abs(self.vectors) ** 2, axis=-1)))

    def branch(self, n: int, m: int) -> np.ndarray:
        return self.weights[n, m] * self.vectors[n, m]

    def items(self) -> Iterator[Tuple[Tuple[int, int], np.ndarray]]:
        n_size, m_size = self.shape
        for n in range(n_size):
            for m in range(m_size):
                yield (n, m), self.branch(n, m)

    def as_dict(self) -> Dict[Tuple[int, int], np.ndarray]:
        return dict(self.items())

    def normalized(self) -> "BranchDecomposition":
        total = self.total_weight
        if total <= 0.0:
            raise ValueError("Cannot normalize a branch decomposition with zero weight")
        scale = 1.0 / math.sqrt(total)
        return BranchDecomposition(
            weights=self.weights * scale, vectors=self.vectors, norm_constant=self.norm_constant * scale
        )


class HeraldResult(BaseModel):
    """Conditional hybrid state produced by a herald click"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    state: MultiModeState = Field(..., description="Normalized state on modes A (|G>, |W>) and B")
    probability: float = Field(..., ge=0.0, le=1.0, description="Probability of the herald outcome")
    branch_weights: Dict[str, float] = Field(..., description="Squared weight of the |G> and |W> branches")
    target_overlap: float = Field(..., ge=0.0, le=1.0, description="|<target(alpha)|state>|^2")
    best_target_alpha: float = Field(..., ge=0.0, description="Target amplitude alpha' maximizing the overlap")
    best_target_overlap: float = Field(..., ge=0.0, le=1.0, description="Overlap at best_target_alpha")
