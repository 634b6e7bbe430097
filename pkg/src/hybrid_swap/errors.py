"""Exception types raised by hybrid-swap"""

from typing import Any, Dict, Optional


class TruncationError(ValueError):
    """Raised when a Fock truncation leaves more than the allowed tail probability."""

    def __init__(self, message: str, tail_probability: float, n_trunc: int):
        super().__init__(message)
        self.tail_probability = tail_probability
        self.n_trunc = n_trunc


class MeasurementError(ValueError):
    """Raised for a measurement record with zero probability."""


class QuadratureError(ValueError):
    """Raised when the mismatch average meets a non-finite integrand."""


class OracleMismatchError(RuntimeError):
    """Raised when the analytic and Fock-space routes disagree beyond tolerance."""

    def __init__(self, message: str, grid_point: Optional[Dict[str, Any]] = None, distance: float = float("nan")):
        super().__init__(message)
        self.grid_point = grid_point or {}
        self.distance = distance
