"""Truncated Fock-space linear algebra"""

from .base import DensityMatrix, FockVector, MultiModeState
from .beam_splitter import BeamSplitterMap, beam_splitter_coherent, beam_splitter_unitary
from .homodyne import PI_QUARTER_ROOT, hermite_functions, homodyne_amplitude, homodyne_bra
from .linalg import partial_trace, partial_transpose, trace_distance
from .states import (
    auto_truncation,
    coherent_fock_vector,
    number_fock_vector,
    poisson_tail,
    vacuum_fock_vector,
)

__all__ = [
    "PI_QUARTER_ROOT",
    "BeamSplitterMap",
    "DensityMatrix",
    "FockVector",
    "MultiModeState",
    "auto_truncation",
    "beam_splitter_coherent",
    "beam_splitter_unitary",
    "coherent_fock_vector",
    "hermite_functions",
    "homodyne_amplitude",
    "homodyne_bra",
    "number_fock_vector",
    "partial_trace",
    "partial_transpose",
    "poisson_tail",
    "trace_distance",
    "vacuum_fock_vector",
]
