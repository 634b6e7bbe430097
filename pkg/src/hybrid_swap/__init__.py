"""
hybrid-swap: hybrid discrete/continuous-variable entanglement swapping with photon loss
"""

from .errors import MeasurementError, OracleMismatchError, QuadratureError, TruncationError
from .measures import MeasureSet, evaluate_measures, fidelity, linear_entropy, negativity
from .mismatch import MismatchSpec, averaged_density
from .protocol import (
    ProtocolParams,
    analytic_branches,
    branches_to_density,
    oracle_density,
    post_measurement_density,
    success_probability,
)
from .sweep import SweepRecord, SweepSpec, run_sweep

__version__ = "0.1.0"

__all__ = [
    "MeasureSet",
    "MeasurementError",
    "MismatchSpec",
    "OracleMismatchError",
    "ProtocolParams",
    "QuadratureError",
    "SweepRecord",
    "SweepSpec",
    "TruncationError",
    "analytic_branches",
    "averaged_density",
    "branches_to_density",
    "evaluate_measures",
    "fidelity",
    "linear_entropy",
    "negativity",
    "oracle_density",
    "post_measurement_density",
    "run_sweep",
    "success_probability",
]
