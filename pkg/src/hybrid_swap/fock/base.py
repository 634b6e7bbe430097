"""Value types for truncated Fock-space states"""

import logging
from typing import Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import linalg

logger = logging.getLogger(__name__)

HERMITIAN_TOLERANCE = 1e-10
NORM_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-10
EIGENVALUE_TOLERANCE = 1e-10


def _frozen_complex_array(value, ndim: int, name: str) -> np.ndarray:
    array = np.array(value, dtype=complex)
    if array.ndim != ndim:
        raise ValueError(f"{name} must be {ndim}-dimensional, got shape {array.shape}")
    if array.size == 0:
        raise ValueError(f"{name} must not be empty")
    if not np.all(np.isfinite(array)):
        raise ValueError(f"{name} contains NaN or Inf")
    array.flags.writeable = False
    return array


class FockVector(BaseModel):
    """Single-mode state over the photon-number basis n = 0..n_trunc"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    amplitudes: np.ndarray = Field(..., description="Complex amplitudes indexed by photon number")
    tail_probability: float = Field(0.0, ge=0.0, description="Probability mass cut off above n_trunc")

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _check_amplitudes(cls, value):
        return _frozen_complex_array(value, 1, "amplitudes")

    @property
    def n_trunc(self) -> int:
        return len(self.amplitudes) - 1

    @property
    def dim(self) -> int:
        return len(self.amplitudes)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def overlap(self, other: "FockVector") -> complex:
        """<self|other> over the common truncated support"""
        n = min(self.dim, other.dim)
        return complex(np.vdot(self.amplitudes[:n], other.amplitudes[:n]))

    def apply_creation(self) -> "FockVector":
        """a† applied in the truncated basis; the top level is dropped"""
        n = np.arange(1, self.dim)
        raised = np.zeros(self.dim, dtype=complex)
        raised[1:] = np.sqrt(n) * self.amplitudes[:-1]
        return FockVector(amplitudes=raised)

    def mean_annihilation(self) -> complex:
        """<b> = sum_n conj(psi_n) sqrt(n+1) psi_{n+1}"""
        n = np.arange(1, self.dim)
        return complex(np.sum(np.conj(self.amplitudes[:-1]) * np.sqrt(n) * self.amplitudes[1:]))

    def normalized(self) -> "FockVector":
        norm = np.sqrt(self.norm_squared)
        if norm == 0.0:
            raise ValueError("Cannot normalize a zero Fock vector")
        return FockVector(amplitudes=self.amplitudes / norm, tail_probability=self.tail_probability)


class MultiModeState(BaseModel):
    """Pure state on several modes, stored row-major over the mode indices"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    mode_dims: Tuple[int, ...] = Field(..., description="Per-mode Hilbert space dimensions")
    amplitudes: np.ndarray = Field(..., description="Flat complex amplitudes of length prod(mode_dims)")

    @field_validator("mode_dims")
    @classmethod
    def _check_dims(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value or any(d < 1 for d in value):
            raise ValueError(f"mode_dims must be a non-empty list of positive integers, got {value}")
        return tuple(int(d) for d in value)

    @field_validator("amplitudes", mode="before")
    @classmethod
    def _check_amplitudes(cls, value):
        return _frozen_complex_array(np.ravel(np.asarray(value)), 1, "amplitudes")

    @model_validator(mode="after")
    def _check_consistency(self) -> "MultiModeState":
        expected = int(np.prod(self.mode_dims))
        if self.amplitudes.size != expected:
            raise ValueError(f"Expected {expected} amplitudes for mode_dims {self.mode_dims}, got {self.amplitudes.size}")
        if self.norm_squared > 1.0 + NORM_TOLERANCE:
            raise ValueError(f"State norm squared {self.norm_squared:.6g} exceeds 1")
        return self

    @classmethod
    def from_tensor(cls, tensor: np.ndarray) -> "MultiModeState":
        return cls(mode_dims=tuple(tensor.shape), amplitudes=tensor.reshape(-1))

    @classmethod
    def from_product(cls, *factors: Union[np.ndarray, FockVector]) -> "MultiModeState":
        tensor = np.ones((), dtype=complex)
        for factor in factors:
            vector = factor.amplitudes if isinstance(factor, FockVector) else np.asarray(factor, dtype=complex)
            tensor = np.multiply.outer(tensor, vector)
        return cls.from_tensor(tensor)

    @property
    def n_modes(self) -> int:
        return len(self.mode_dims)

    @property
    def norm_squared(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def as_tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.mode_dims)

    def normalized(self) -> "MultiModeState":
        norm = np.sqrt(self.norm_squared)
        if norm == 0.0:
            raise ValueError("Cannot normalize a zero state")
        return MultiModeState(mode_dims=self.mode_dims, amplitudes=self.amplitudes / norm)

    def tensor(self, other: "MultiModeState") -> "MultiModeState":
        return MultiModeState.from_tensor(np.multiply.outer(self.as_tensor(), other.as_tensor()))

    def append_mode(self, dim: int) -> "MultiModeState":
        """Append a vacuum mode of the given dimension"""
        vacuum = np.zeros(dim, dtype=complex)
        vacuum[0] = 1.0
        return MultiModeState.from_tensor(np.multiply.outer(self.as_tensor(), vacuum))

    def project_mode(self, mode: int, functional: Sequence[complex]) -> "MultiModeState":
        """Contract one mode with a row functional f_n = <phi|n> and drop it"""
        self._check_mode(mode)
        row = np.asarray(functional, dtype=complex)
        dim = self.mode_dims[mode]
        if row.shape != (dim,):
            raise ValueError(f"Functional length {row.shape} does not match mode {mode} dimension {dim}")
        projected = np.tensordot(self.as_tensor(), row, axes=([mode], [0]))
        if projected.ndim == 0:
            raise ValueError("Projection would remove every mode")
        return MultiModeState.from_tensor(projected)

    def to_density(self) -> "DensityMatrix":
        return DensityMatrix.from_pure(self.amplitudes, self.mode_dims, normalize=False)

    def _check_mode(self, mode: int) -> None:
        if not 0 <= mode < self.n_modes:
            raise ValueError(f"Mode index {mode} out of range for {self.n_modes} modes")


class DensityMatrix(BaseModel):
    """Hermitian density operator on a product of subsystems"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dims: Tuple[int, ...] = Field(..., description="Subsystem dimensions; their product is the matrix size")
    entries: np.ndarray = Field(..., description="dim x dim complex matrix")

    @field_validator("entries", mode="before")
    @classmethod
    def _check_entries(cls, value):
        matrix = np.array(value, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Density matrix must be square, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("Density matrix contains NaN or Inf")
        scale = max(1.0, float(np.max(np.abs(matrix))))
        skew = float(np.max(np.abs(matrix - matrix.conj().T)))
        if skew > HERMITIAN_TOLERANCE * scale:
            raise ValueError(f"Density matrix is not Hermitian (max |rho - rho^dagger| = {skew:.3g})")
        hermitian = 0.5 * (matrix + matrix.conj().T)
        hermitian.flags.writeable = False
        return hermitian

    @model_validator(mode="after")
    def _check_dims(self) -> "DensityMatrix":
        if int(np.prod(self.dims)) != self.entries.shape[0]:
            raise ValueError(f"dims {self.dims} do not match matrix size {self.entries.shape[0]}")
        return self

    @classmethod
    def from_pure(cls, vector: Sequence[complex], dims: Sequence[int], normalize: bool = True) -> "DensityMatrix":
        psi = np.ravel(np.asarray(vector, dtype=complex))
        rho = cls(dims=tuple(dims), entries=np.outer(psi, psi.conj()))
        return rho.normalized() if normalize else rho

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def normalized(self) -> "DensityMatrix":
        trace = self.trace
        if trace <= 0.0:
            raise ValueError(f"Cannot normalize a density matrix with trace {trace:.3g}")
        return DensityMatrix(dims=self.dims, entries=self.entries / trace)

    def eigenvalues(self) -> np.ndarray:
        return linalg.eigvalsh(self.entries)

    def conjugated(self, unitary: np.ndarray) -> "DensityMatrix":
        """U rho U†"""
        return DensityMatrix(dims=self.dims, entries=unitary @ self.entries @ unitary.conj().T)

    def check_physical(self, tolerance: float = EIGENVALUE_TOLERANCE) -> None:
        """Raise ValueError unless trace one and positive semidefinite"""
        if abs(self.trace - 1.0) > TRACE_TOLERANCE:
            raise ValueError(f"Density matrix trace {self.trace:.12g} is not 1")
        smallest = float(self.eigenvalues()[0])
        if smallest < -tolerance:
            raise ValueError(f"Density matrix has negative eigenvalue {smallest:.3g}")
