"""Heralded preparation of the hybrid state from an atomic source and down-conversion"""

import logging
import math

import numpy as np
from scipy import optimize

from hybrid_swap.errors import MeasurementError
from hybrid_swap.fock import MultiModeState, auto_truncation, coherent_fock_vector
from .params import HeraldParams, HeraldResult

logger = logging.getLogger(__name__)

MIN_HERALD_PROBABILITY = 1e-15
TARGET_SEARCH_SPAN = 3.0


def _source_state(h: HeraldParams, n_trunc: int) -> np.ndarray:
    """
    Tensor over (A, p, B) with A in {|G>, |W>} and p in {0, 1, 2} photons:

        sqrt(1-eta) sqrt(1-p_c) |G,0>|alpha> + sqrt(eta) sqrt(1-p_c) |G,1> a†|alpha>
      + sqrt(1-eta) sqrt(p_c)   |W,1>|alpha> + sqrt(eta) sqrt(p_c)   |W,2> a†|alpha>

    The photon-added state a†|alpha> is normalized.
    """
    coherent = coherent_fock_vector(h.alpha, n_trunc, strict=False)
    added = coherent.apply_creation().normalized()
    keep_eta, lose_eta = math.sqrt(h.eta), math.sqrt(1.0 - h.eta)
    ground, excited = math.sqrt(1.0 - h.p_c), math.sqrt(h.p_c)

    tensor = np.zeros((2, 3, n_trunc + 1), dtype=complex)
    tensor[0, 0] = lose_eta * ground * coherent.amplitudes
    tensor[0, 1] = keep_eta * ground * added.amplitudes
    tensor[1, 1] = lose_eta * excited * coherent.amplitudes
    tensor[1, 2] = keep_eta * excited * added.amplitudes
    return tensor


def target_state(alpha: float, n_trunc: int) -> np.ndarray:
    """(|G>|alpha> + |W>|-alpha>)/sqrt(2) as a (2, n_trunc+1) tensor"""
    plus = coherent_fock_vector(alpha, n_trunc, strict=False).amplitudes
    minus = coherent_fock_vector(-alpha, n_trunc, strict=False).amplitudes
    target = np.stack([plus, minus])
    return target / np.linalg.norm(target)


def _overlap(state: np.ndarray, alpha: float) -> float:
    value = abs(np.vdot(target_state(alpha, state.shape[1] - 1), state)) ** 2
    return float(min(value, 1.0))


def herald_hybrid_state(h: HeraldParams) -> HeraldResult:
    """
    Condition the source on `herald_outcome` photons in mode p

    Args:
        h: Source probabilities, injected amplitude and the detected photon count

    Returns:
        HeraldResult with the conditional state, its probability and target overlaps

    Raises:
        MeasurementError: if the outcome has zero probability
    """
    # room for a† and for the target search up to alpha + 3
    n_trunc = h.n_trunc if h.n_trunc is not None else auto_truncation(h.alpha + TARGET_SEARCH_SPAN) + 1
    source = _source_state(h, n_trunc)
    total = float(np.vdot(source, source).real)
    # the source never puts more than two photons in mode p
    if h.herald_outcome < source.shape[1]:
        conditional = source[:, h.herald_outcome, :]
        probability = float(np.vdot(conditional, conditional).real) / total
    else:
        probability = 0.0
    if probability < MIN_HERALD_PROBABILITY:
        raise MeasurementError(
            f"Herald outcome {h.herald_outcome} has probability {probability:.3g} for p_c={h.p_c}, eta={h.eta}"
        )

    state = MultiModeState.from_tensor(conditional).normalized()
    tensor = state.as_tensor()
    weights = np.sum(np.abs(tensor) ** 2, axis=1)

    search = optimize.minimize_scalar(
        lambda a: -_overlap(tensor, a), bounds=(0.0, h.alpha + TARGET_SEARCH_SPAN), method="bounded"
    )
    best_alpha = float(search.x)
    logger.info(f"Herald outcome {h.herald_outcome}: probability {probability:.4g}, best target alpha {best_alpha:.4g}")

    return HeraldResult(
        state=state,
        probability=min(probability, 1.0),
        branch_weights={"G": float(weights[0]), "W": float(weights[1])},
        target_overlap=_overlap(tensor, h.alpha),
        best_target_alpha=best_alpha,
        best_target_overlap=_overlap(tensor, best_alpha),
    )
