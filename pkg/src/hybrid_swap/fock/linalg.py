"""Partial trace, partial transpose and trace distance"""

import logging
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import linalg

from .base import DensityMatrix, MultiModeState

logger = logging.getLogger(__name__)


def _validate_modes(modes: Sequence[int], n_modes: int) -> Tuple[int, ...]:
    traced = tuple(sorted(set(int(m) for m in modes)))
    for mode in traced:
        if not 0 <= mode < n_modes:
            raise ValueError(f"Mode index {mode} out of range for {n_modes} modes")
    if len(traced) == n_modes:
        raise ValueError("Cannot trace out every mode")
    return traced


def partial_trace(
    state: Union[MultiModeState, DensityMatrix], modes_to_trace: Sequence[int]
) -> DensityMatrix:
    """
    Reduced density matrix on the modes not listed in modes_to_trace.

    The trace of the input is preserved, so a sub-normalized pure state gives a
    reduced matrix with trace equal to its squared norm.
    """
    if isinstance(state, MultiModeState):
        dims = state.mode_dims
        traced = _validate_modes(modes_to_trace, len(dims))
        kept = [m for m in range(len(dims)) if m not in traced]
        kept_dims = tuple(dims[m] for m in kept)
        matrix = np.transpose(state.as_tensor(), kept + list(traced)).reshape(int(np.prod(kept_dims)), -1)
        return DensityMatrix(dims=kept_dims, entries=matrix @ matrix.conj().T)

    dims = state.dims
    traced = _validate_modes(modes_to_trace, len(dims))
    tensor = state.entries.reshape(dims + dims)
    remaining = len(dims)
    for mode in reversed(traced):
        tensor = np.trace(tensor, axis1=mode, axis2=mode + remaining)
        remaining -= 1
    kept_dims = tuple(d for m, d in enumerate(dims) if m not in traced)
    size = int(np.prod(kept_dims))
    return DensityMatrix(dims=kept_dims, entries=tensor.reshape(size, size))


def partial_transpose(
    rho: DensityMatrix, subsystem: int, dims: Optional[Tuple[int, int]] = None
) -> DensityMatrix:
    """Transpose the indices of one factor of a bipartite matrix"""
    d1, d2 = dims if dims is not None else rho.dims
    if d1 * d2 != rho.dim:
        raise ValueError(f"Dimensions ({d1}, {d2}) do not match matrix size {rho.dim}")
    if subsystem not in (0, 1):
        raise ValueError(f"subsystem must be 0 or 1, got {subsystem}")
    tensor = rho.entries.reshape(d1, d2, d1, d2)
    swapped = tensor.transpose(2, 1, 0, 3) if subsystem == 0 else tensor.transpose(0, 3, 2, 1)
    return DensityMatrix(dims=(d1, d2), entries=swapped.reshape(rho.dim, rho.dim))


def trace_distance(rho: DensityMatrix, sigma: DensityMatrix) -> float:
    """1/2 ||rho - sigma||_1"""
    if rho.dim != sigma.dim:
        raise ValueError(f"Dimension mismatch: {rho.dim} vs {sigma.dim}")
    return 0.5 * float(np.sum(np.abs(linalg.eigvalsh(rho.entries - sigma.entries))))
