"""Brute-force Fock-space simulation of the swapping circuit"""

import logging
import math
from typing import Tuple

import numpy as np

from hybrid_swap.fock import (
    BeamSplitterMap,
    DensityMatrix,
    MultiModeState,
    auto_truncation,
    coherent_fock_vector,
    homodyne_bra,
    partial_trace,
)
from .analytic import phase_correction_unitary
from .params import ProtocolParams

logger = logging.getLogger(__name__)


def build_hybrid_state(
    alpha: float, n_trunc: int, epsilon_trunc: float = 1e-12, strict: bool = True
) -> MultiModeState:
    """(|0>_A |alpha>_B + |1>_A |-alpha>_B) / sqrt(2) with mode B cut at n_trunc photons"""
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    plus = coherent_fock_vector(alpha, n_trunc, epsilon_trunc, strict)
    minus = coherent_fock_vector(-alpha, n_trunc, epsilon_trunc, strict)
    tensor = np.stack([plus.amplitudes, minus.amplitudes]) / math.sqrt(2.0)
    return MultiModeState.from_tensor(tensor).normalized()


def apply_loss(state: MultiModeState, mode: int, T: float) -> MultiModeState:
    """Append a vacuum environment mode and mix it with `mode` at transmission T"""
    dim = state.mode_dims[mode]
    extended = state.append_mode(dim)
    return BeamSplitterMap(T, dim, dim).apply(extended, mode, extended.n_modes - 1)


def _oracle_cutoff(params: ProtocolParams) -> int:
    # The 50:50 outputs reach amplitude sqrt(2) alpha.
    return params.n_trunc if params.n_trunc is not None else auto_truncation(math.sqrt(2.0) * params.alpha)


def _lossy_pairs(params: ProtocolParams) -> Tuple[np.ndarray, np.ndarray]:
    """Tensors (A, B, eps_B) and (C, D, eps_D) after both loss channels"""
    n_trunc = _oracle_cutoff(params)
    logger.debug(f"Oracle Fock cutoff {n_trunc} for alpha={params.alpha}")
    pair = build_hybrid_state(params.alpha, n_trunc, params.epsilon_trunc, params.strict_truncation)
    ab = apply_loss(pair, 1, params.transmission_b).as_tensor()
    cd = apply_loss(pair, 1, params.transmission_d).as_tensor()
    return ab, cd


def _projected_state(params: ProtocolParams) -> MultiModeState:
    """Sub-normalized state on (A, eps_B, C, eps_D) after both projections"""
    ab, cd = _lossy_pairs(params)
    dim = ab.shape[1]
    mixer = BeamSplitterMap(0.5, dim, dim)
    kernel = mixer.output_projection([1.0], homodyne_bra(params.x, params.theta, 2 * dim - 1))
    partial = np.tensordot(ab, kernel, axes=([1], [0]))           # (A, eps_B, D)
    projected = np.tensordot(partial, cd, axes=([2], [1]))        # (A, eps_B, C, eps_D)
    return MultiModeState.from_tensor(projected)


def oracle_outcome_density(params: ProtocolParams) -> float:
    """Joint probability density of vacuum on B and outcome x on D, from the circuit"""
    return _projected_state(params).norm_squared


def oracle_density(params: ProtocolParams) -> DensityMatrix:
    """
    AC density matrix computed by simulating every mode in Fock space.

    Loss channels and the 50:50 mixer act as BeamSplitterMap blocks; the two
    projections are folded into one kernel on the (B, D) inputs so that the
    full six-mode state is never formed.

    Args:
        params: Protocol parameters, including the oracle cutoff settings

    Returns:
        Normalized AC DensityMatrix, phase corrected when params asks for it

    Raises:
        TruncationError: in strict mode, if the Fock cutoff leaves more than epsilon_trunc
    """
    # trace out both environments
    rho = partial_trace(_projected_state(params), [1, 3]).normalized()
    if params.phase_corrected:
        rho = rho.conjugated(phase_correction_unitary(params))
    return rho


def oracle_success_probability(params: ProtocolParams) -> float:
    """Squared norm after projecting mode B on vacuum, keeping mode D"""
    ab, cd = _lossy_pairs(params)
    dim = ab.shape[1]
    mixer = BeamSplitterMap(0.5, dim, dim)
    total = 0.0
    for k in range(mixer.max_photons + 1):
        i = np.arange(max(0, k - dim + 1), min(k, dim - 1) + 1)
        # <0, k| U |i, k - i>
        coefficients = mixer.block(k)[0, i]
        amplitude = np.einsum("i,aie,cif->aecf", coefficients, ab[:, i, :], cd[:, k - i, :])
        total += float(np.vdot(amplitude, amplitude).real)
    return total
