"""Hybrid entanglement swapping: analytic branches, circuit oracle and heralded source"""

from .analytic import (
    analytic_branches,
    branch_cutoffs,
    branches_to_density,
    equal_loss_branches,
    ideal_limit_density,
    outcome_density,
    output_labels,
    phase_correction_unitary,
    post_measurement_density,
    success_probability,
)
from .circuit import (
    apply_loss,
    build_hybrid_state,
    oracle_density,
    oracle_outcome_density,
    oracle_success_probability,
)
from .herald import herald_hybrid_state, target_state
from .params import BranchDecomposition, HeraldParams, HeraldResult, ProtocolParams

__all__ = [
    "BranchDecomposition",
    "HeraldParams",
    "HeraldResult",
    "ProtocolParams",
    "analytic_branches",
    "apply_loss",
    "branch_cutoffs",
    "branches_to_density",
    "build_hybrid_state",
    "equal_loss_branches",
    "herald_hybrid_state",
    "ideal_limit_density",
    "oracle_density",
    "oracle_outcome_density",
    "oracle_success_probability",
    "outcome_density",
    "output_labels",
    "phase_correction_unitary",
    "post_measurement_density",
    "success_probability",
    "target_state",
]
