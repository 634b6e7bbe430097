"""Beam splitter on coherent labels and on truncated two-mode Fock space"""

import logging
import math
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
from scipy import linalg

from .base import MultiModeState

logger = logging.getLogger(__name__)


def _check_transmission(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0 or math.isnan(t):
        raise ValueError(f"Beam splitter transmission must lie in [0, 1], got {t}")
    return t


def beam_splitter_coherent(alpha: complex, beta: complex, t: float) -> Tuple[complex, complex]:
    """
    Output labels for |alpha>_a |beta>_b mixed at transmission t.

    The first output carries the minus sign:
    (alpha sqrt(t) - beta sqrt(1-t), alpha sqrt(1-t) + beta sqrt(t)).
    """
    t = _check_transmission(t)
    r = math.sqrt(1.0 - t)
    s = math.sqrt(t)
    return complex(alpha) * s - complex(beta) * r, complex(alpha) * r + complex(beta) * s


@lru_cache(maxsize=4096)
def _sector(t: float, k: int) -> np.ndarray:
    # Basis |j, k-j>, j photons in the first mode. Generator a b† - a† b.
    theta = math.acos(math.sqrt(t))
    generator = np.zeros((k + 1, k + 1))
    for j in range(1, k + 1):
        generator[j - 1, j] = math.sqrt(j * (k - j + 1))
    for j in range(k):
        generator[j + 1, j] = -math.sqrt((j + 1) * (k - j))
    block = linalg.expm(theta * generator)
    block.flags.writeable = False
    return block


class BeamSplitterMap:
    """
    Beam splitter acting on a truncated two-mode space of dimensions
    (dim_a, dim_b).

    The map is block diagonal in total photon number k. Each block is the
    exact (k+1)-dimensional rotation exp(theta (a b† - a† b)) with
    cos(theta) = sqrt(t), so blocks never lose precision to binomial sums.
    Outputs that would need more than dim - 1 photons in a mode are cut off,
    which is the only source of non-unitarity.
    """

    def __init__(self, t: float, dim_a: int, dim_b: int):
        if dim_a < 1 or dim_b < 1:
            raise ValueError(f"Mode dimensions must be >= 1, got ({dim_a}, {dim_b})")
        self.t = _check_transmission(t)
        self.dim_a = int(dim_a)
        self.dim_b = int(dim_b)

    def __repr__(self) -> str:
        return f"BeamSplitterMap(t={self.t}, dim_a={self.dim_a}, dim_b={self.dim_b})"

    @property
    def max_photons(self) -> int:
        return self.dim_a + self.dim_b - 2

    def block(self, k: int) -> np.ndarray:
        """Full (k+1)x(k+1) sector for total photon number k, indexed by photons in mode a"""
        if k < 0:
            raise ValueError(f"Photon number must be >= 0, got {k}")
        return _sector(self.t, int(k))

    def _support(self, k: int) -> np.ndarray:
        low = max(0, k - self.dim_b + 1)
        high = min(k, self.dim_a - 1)
        return np.arange(low, high + 1)

    def apply_tensor(self, tensor: np.ndarray, mode_a: int, mode_b: int) -> np.ndarray:
        """Apply the map to two axes of an amplitude tensor"""
        if mode_a == mode_b:
            raise ValueError("Beam splitter needs two distinct modes")
        if tensor.shape[mode_a] != self.dim_a or tensor.shape[mode_b] != self.dim_b:
            raise ValueError(
                f"Mode dimensions ({tensor.shape[mode_a]}, {tensor.shape[mode_b]}) "
                f"do not match beam splitter ({self.dim_a}, {self.dim_b})"
            )
        moved = np.moveaxis(np.asarray(tensor, dtype=complex), (mode_a, mode_b), (-2, -1))
        result = np.zeros_like(moved)
        for k in range(self.max_photons + 1):
            js = self._support(k)
            if js.size == 0:
                continue
            sector_in = moved[..., js, k - js]
            if not np.any(sector_in):
                continue
            sub = self.block(k)[np.ix_(js, js)]
            result[..., js, k - js] = sector_in @ sub.T
        return np.moveaxis(result, (-2, -1), (mode_a, mode_b))

    def apply(self, state: MultiModeState, mode_a: int, mode_b: int) -> MultiModeState:
        return MultiModeState.from_tensor(self.apply_tensor(state.as_tensor(), mode_a, mode_b))

    def output_projection(self, row_a: Sequence[complex], row_b: Sequence[complex]) -> np.ndarray:
        """
        Kernel K[i, j] = sum_p row_a[p] row_b[k - p] <p, k-p| U |i, j> with k = i + j.

        Contracting the two input modes with K equals applying the beam splitter
        and then the functionals row_a, row_b on its outputs. Output levels past
        the end of a row are treated as zero; rows of length dim_a + dim_b - 1
        make the projection exact.
        """
        row_a = np.asarray(row_a, dtype=complex)
        row_b = np.asarray(row_b, dtype=complex)
        kernel = np.zeros((self.dim_a, self.dim_b), dtype=complex)
        for k in range(self.max_photons + 1):
            js = self._support(k)
            if js.size == 0:
                continue
            p = np.arange(min(k, len(row_a) - 1) + 1)
            p = p[k - p < len(row_b)]
            if p.size == 0:
                continue
            weights = row_a[p] * row_b[k - p]
            kernel[js, k - js] = weights @ self.block(k)[np.ix_(p, js)]
        return kernel

    def to_dense(self) -> np.ndarray:
        """Matrix on the flattened (dim_a * dim_b) space, row-major in (a, b)"""
        size = self.dim_a * self.dim_b
        identity = np.eye(size, dtype=complex).reshape(size, self.dim_a, self.dim_b)
        return self.apply_tensor(identity, 1, 2).reshape(size, size).T


def beam_splitter_unitary(t: float, dim_a: int, dim_b: int) -> BeamSplitterMap:
    return BeamSplitterMap(t, dim_a, dim_b)
