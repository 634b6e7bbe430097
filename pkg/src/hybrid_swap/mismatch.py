"""Averaging over a one-sided Gaussian distribution of the loss mismatch"""

import logging
import math
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import legendre
from pydantic import BaseModel, ConfigDict, Field
from scipy import special

from hybrid_swap.errors import QuadratureError
from hybrid_swap.fock import DensityMatrix
from hybrid_swap.protocol import ProtocolParams, post_measurement_density, success_probability

logger = logging.getLogger(__name__)

WIDTHS_PER_CUT = 6.0


class MismatchSpec(BaseModel):
    """Width of the mismatch distribution and quadrature settings"""

    model_config = ConfigDict(frozen=True)

    Delta: float = Field(..., ge=0.0, allow_inf_nan=False, description="Width of the one-sided Gaussian")
    quad_points: int = Field(64, ge=2, description="Gauss-Legendre node count")
    upper_cut: Optional[float] = Field(None, gt=0.0, description="Upper integration limit; None means min(6 Delta, T)")

    def resolved_upper_cut(self, T: float) -> float:
        if self.upper_cut is None:
            return min(WIDTHS_PER_CUT * self.Delta, T)
        if self.upper_cut > T:
            raise ValueError(f"upper_cut={self.upper_cut} exceeds T={T}; the second channel would transmit < 0")
        return self.upper_cut


def mismatch_weight(delta: float, Delta: float) -> float:
    """f(delta) = sqrt(2 / (pi Delta^2)) exp(-delta^2 / (2 Delta^2)) on delta >= 0"""
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if Delta <= 0:
        raise ValueError(f"Delta must be > 0 for a density, got {Delta}")
    return math.sqrt(2.0 / (math.pi * Delta ** 2)) * math.exp(-(delta ** 2) / (2.0 * Delta ** 2))


def truncated_mass(spec: MismatchSpec, T: float) -> float:
    """Probability mass of the distribution inside [0, upper_cut]"""
    if spec.Delta == 0.0:
        return 1.0
    return float(special.erf(spec.resolved_upper_cut(T) / (math.sqrt(2.0) * spec.Delta)))


def mismatch_nodes(spec: MismatchSpec, T: float) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes on [0, upper_cut] and weights that already include f(delta)"""
    upper = spec.resolved_upper_cut(T)
    if upper < WIDTHS_PER_CUT * spec.Delta:
        logger.warning(f"Mismatch quadrature clamped at T={T} below {WIDTHS_PER_CUT:g} widths (Delta={spec.Delta})")
    points, weights = legendre.leggauss(spec.quad_points)
    deltas = 0.5 * upper * (points + 1.0)
    density = np.array([mismatch_weight(d, spec.Delta) for d in deltas])
    return deltas, 0.5 * upper * weights * density


def _average(params: ProtocolParams, spec: MismatchSpec, evaluate):
    deltas, weights = mismatch_nodes(spec, params.T)
    logger.debug(f"Averaging over {len(deltas)} mismatch nodes up to {deltas[-1]:.4g}")
    total = None
    for delta, weight in zip(deltas, weights):
        value = np.asarray(evaluate(params.with_updates(delta=float(delta))))
        if not np.all(np.isfinite(value)):
            raise QuadratureError(f"Non-finite integrand at delta={delta:.6g} (alpha={params.alpha}, T={params.T})")
        total = weight * value if total is None else total + weight * value
    return total


def averaged_density(params: ProtocolParams, spec: MismatchSpec) -> DensityMatrix:
    """
    Mismatch-averaged AC density matrix, renormalized to unit trace.

    Args:
        params: Protocol parameters; params.delta is ignored
        spec: Width and quadrature settings of the mismatch distribution

    Returns:
        Averaged DensityMatrix; Delta = 0 returns the delta = 0 state itself

    Raises:
        QuadratureError: if the integrand is not finite at some node
    """
    if spec.Delta == 0.0:
        return post_measurement_density(params.with_updates(delta=0.0))
    return averaged_density_unnormalized(params, spec).normalized()


def averaged_density_unnormalized(params: ProtocolParams, spec: MismatchSpec) -> DensityMatrix:
    """Quadrature sum before renormalization; its trace is the captured Gaussian mass"""
    if spec.Delta == 0.0:
        return post_measurement_density(params.with_updates(delta=0.0))
    entries = _average(params, spec, lambda p: post_measurement_density(p).entries)
    return DensityMatrix(dims=(2, 2), entries=entries)


def averaged_success_probability(params: ProtocolParams, spec: MismatchSpec) -> float:
    # divide by the captured mass so a clamped cutoff still averages to a probability
    if spec.Delta == 0.0:
        return success_probability(params.with_updates(delta=0.0))
    return float(_average(params, spec, success_probability)) / truncated_mass(spec, params.T)
