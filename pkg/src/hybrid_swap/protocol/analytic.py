"""
Closed-form post-measurement state of the hybrid swapping protocol.

Both hybrid states (|0>|alpha> + |1>|-alpha>)/sqrt(2) lose photons to their
environments, are mixed on a 50:50 beam splitter, and the outputs are
projected on vacuum (mode B) and on a quadrature eigenstate (mode D). The
environments keep photon numbers n and m, which index the branches.
"""

import cmath
import logging
import math
from typing import List, Tuple

import numpy as np
from scipy import special, stats

from hybrid_swap.errors import MeasurementError
from hybrid_swap.fock import DensityMatrix, beam_splitter_coherent, homodyne_amplitude
from .params import BranchDecomposition, ProtocolParams

logger = logging.getLogger(__name__)

# Qubit value 0 carries +alpha, value 1 carries -alpha; basis order |AC> = 00, 01, 10, 11.
AC_SIGNS: List[Tuple[int, int]] = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
IDEAL_LIMIT_THRESHOLD = 3.0


def environment_means(params: ProtocolParams) -> Tuple[float, float]:
    """Mean photon numbers lost to the B and D environments"""
    a2 = params.alpha ** 2
    return a2 * (1.0 - params.transmission_b), a2 * (1.0 - params.transmission_d)


def _poisson_cutoff(mean: float, epsilon: float) -> int:
    if mean == 0.0:
        return 0
    n = 0
    while stats.poisson.sf(n, mean) >= epsilon:
        n += 1
    return n


def branch_cutoffs(params: ProtocolParams) -> Tuple[int, int]:
    """
    Largest environment photon numbers (n_max, m_max) kept in the series.

    Each side drops less than epsilon_branch / 2 of its Poisson weight, so the
    rectangle holds all but epsilon_branch of the total.
    """
    if params.n_trunc_branches is not None:
        return params.n_trunc_branches, params.n_trunc_branches
    mu_b, mu_d = environment_means(params)
    half = params.epsilon_branch / 2.0
    cutoffs = _poisson_cutoff(mu_b, half), _poisson_cutoff(mu_d, half)
    logger.debug(f"Branch cutoffs {cutoffs} for environment means ({mu_b:.4g}, {mu_d:.4g})")
    return cutoffs


def output_labels(params: ProtocolParams) -> List[Tuple[complex, complex]]:
    """Coherent labels (beta_B, beta_D) after loss and 50:50 mixing, per AC basis state"""
    labels = []
    for s_a, s_c in AC_SIGNS:
        b_signal, _ = beam_splitter_coherent(s_a * params.alpha, 0.0, params.transmission_b)
        d_signal, _ = beam_splitter_coherent(s_c * params.alpha, 0.0, params.transmission_d)
        labels.append(beam_splitter_coherent(b_signal, d_signal, 0.5))
    return labels


def _outcome_amplitudes(params: ProtocolParams) -> np.ndarray:
    # 1/2 from the two hybrid-state normalizations
    return np.array(
        [
            0.5 * math.exp(-0.5 * abs(beta_b) ** 2) * homodyne_amplitude(params.x, params.theta, beta_d)
            for beta_b, beta_d in output_labels(params)
        ]
    )


def phase_correction_unitary(params: ProtocolParams) -> np.ndarray:
    """
    Local feed-forward diag(1, e^{i phi_C}) (x) diag(1, e^{i phi_A}) on AC.

    The angles are read from the (0, 0) branch so that its |00>, |01> and
    |10> entries end up with a common phase. For the pi/2 quadrature the
    outcome phases are additive and |11> is aligned as well.
    """
    phases = np.angle(_outcome_amplitudes(params))
    phi_a = phases[0] - phases[2]
    phi_c = phases[0] - phases[1]
    return np.diag(np.exp(1j * np.array([0.0, phi_c, phi_a, phi_a + phi_c])))


def _sqrt_poisson(mean: float, n_max: int) -> np.ndarray:
    n = np.arange(n_max + 1)
    if mean == 0.0:
        return (n == 0).astype(float)
    return np.exp(-0.5 * mean + 0.5 * n * math.log(mean) - 0.5 * special.gammaln(n + 1))


def _environment_weights(mu_b: float, mu_d: float, n_max: int, m_max: int) -> np.ndarray:
    # sqrt(Poisson(n; mu_b) Poisson(m; mu_d)); signs live on the vectors
    return np.outer(_sqrt_poisson(mu_b, n_max), _sqrt_poisson(mu_d, m_max))


def _branch_signs(n_max: int, m_max: int) -> np.ndarray:
    n = np.arange(n_max + 1)[:, None]
    m = np.arange(m_max + 1)[None, :]
    signs = np.empty((n_max + 1, m_max + 1, 4))
    signs[..., 0] = 1.0
    signs[..., 1] = (-1.0) ** m
    signs[..., 2] = (-1.0) ** n
    signs[..., 3] = (-1.0) ** (n + m)
    return signs


def analytic_branches(params: ProtocolParams) -> BranchDecomposition:
    """
    Branch decomposition of the lossy, unequal-transmission protocol.

    Branch (n, m) has weight (alpha r_B)^n (alpha r_D)^m / sqrt(n! m!) times
    exp(-(mu_B + mu_D)/2), with r = sqrt(1 - transmission), and an AC vector
    whose entries carry the vacuum overlap on B, the homodyne amplitude on D
    and the environment signs (-1)^m, (-1)^n, (-1)^(n+m). The result is not
    normalized; its total weight is the probability density of the outcome.
    """
    n_max, m_max = branch_cutoffs(params)
    mu_b, mu_d = environment_means(params)
    amplitudes = _outcome_amplitudes(params)
    if params.phase_corrected:
        amplitudes = phase_correction_unitary(params) @ amplitudes

    weights = _environment_weights(mu_b, mu_d, n_max, m_max)
    vectors = _branch_signs(n_max, m_max) * amplitudes
    return BranchDecomposition(weights=weights, vectors=vectors)


def equal_loss_branches(params: ProtocolParams) -> BranchDecomposition:
    """
    Equal-loss (delta = 0) closed form for the pi/2 quadrature, written out directly.

    |00> and |11> survive the vacuum test undamped and pick up the outcome
    phases e^{-+2i sqrt(T) alpha x}; |01> and |10> are damped by e^{-T alpha^2}.
    """
    if params.delta != 0.0:
        raise ValueError(f"Equal-loss form needs delta = 0, got {params.delta}")
    if not math.isclose(params.theta, math.pi / 2, abs_tol=1e-15):
        raise ValueError(f"Equal-loss form is written for theta = pi/2, got {params.theta}")

    alpha, T, x = params.alpha, params.T, params.x
    gaussian = 0.5 * math.pi ** -0.25 * math.exp(-0.5 * x * x)
    damping = math.exp(-T * alpha ** 2)
    phase = 2.0 * math.sqrt(T) * alpha * x
    amplitudes = gaussian * np.array([cmath.exp(-1j * phase), damping, damping, cmath.exp(1j * phase)])
    if params.phase_corrected:
        amplitudes = amplitudes * np.array([1.0, cmath.exp(-1j * phase), cmath.exp(-1j * phase), cmath.exp(-2j * phase)])

    n_max, m_max = branch_cutoffs(params)
    mu = alpha ** 2 * (1.0 - T)
    n = np.arange(n_max + 1)[:, None]
    m = np.arange(m_max + 1)[None, :]
    weights = np.exp(-mu - 0.5 * (special.gammaln(n + 1) + special.gammaln(m + 1))) * np.sqrt(mu) ** (n + m)
    return BranchDecomposition(weights=weights, vectors=_branch_signs(n_max, m_max) * amplitudes)


def branches_to_density(branches: BranchDecomposition) -> DensityMatrix:
    """rho_AC = sum_nm w_nm^2 |v_nm><v_nm|, normalized to unit trace"""
    total = branches.total_weight
    if not total > 0.0:
        raise MeasurementError("Measurement record has zero probability; every branch vanishes")
    weighted = branches.vectors * branches.weights[..., None]
    rho = np.einsum("nmi,nmj->ij", weighted, weighted.conj())
    return DensityMatrix(dims=(2, 2), entries=rho / total)


def post_measurement_density(params: ProtocolParams) -> DensityMatrix:
    """
    Normalized AC state after vacuum on B and outcome x on D

    Args:
        params: Protocol parameters

    Returns:
        DensityMatrix on modes A and C in the basis |00>, |01>, |10>, |11>
    """
    return branches_to_density(analytic_branches(params))


def outcome_density(params: ProtocolParams) -> float:
    """Joint probability density of vacuum on B and outcome x on D"""
    return analytic_branches(params).total_weight


def ideal_limit_density(params: ProtocolParams) -> DensityMatrix:
    """
    Large-amplitude approximation keeping only |00> and |11>.

    Populations are 1/2 each. The coherence is 1/2 times the environment
    series sum (-1)^(n+m) mu_B^n mu_D^m / (n! m!) over its unsigned sum,
    which is exp(-2 (mu_B + mu_D)), times the outcome phase.
    """
    if params.T * params.alpha ** 2 < IDEAL_LIMIT_THRESHOLD:
        logger.warning(
            f"Ideal-limit density used outside its regime: T*alpha^2 = {params.T * params.alpha ** 2:.3g} "
            f"< {IDEAL_LIMIT_THRESHOLD}"
        )
    mu_b, mu_d = environment_means(params)
    n_max, m_max = branch_cutoffs(params)
    weights = _environment_weights(mu_b, mu_d, n_max, m_max) ** 2
    signs = _branch_signs(n_max, m_max)[..., 3]
    coherence = 0.5 * float(np.sum(signs * weights) / np.sum(weights))

    if not params.phase_corrected:
        amplitudes = _outcome_amplitudes(params)
        coherence = coherence * cmath.exp(1j * (cmath.phase(amplitudes[0]) - cmath.phase(amplitudes[3])))

    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = 0.5
    rho[0, 3] = coherence
    rho[3, 0] = np.conj(coherence)
    return DensityMatrix(dims=(2, 2), entries=rho)


def success_probability(params: ProtocolParams) -> float:
    """
    Probability of vacuum on mode B, marginal over the homodyne outcome.

    Each AC component keeps exp(-|beta_B|^2) of its weight, giving
    (exp(-alpha^2 T_-^2 / 2) + exp(-alpha^2 T_+^2 / 2)) / 2.
    """
    return 0.25 * sum(math.exp(-abs(beta_b) ** 2) for beta_b, _ in output_labels(params))
