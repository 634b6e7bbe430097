import sys
import os

# Add the src directory to the path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

import numpy as np
import pytest

from hybrid_swap.fock import DensityMatrix
from hybrid_swap.measures import bell_state
from hybrid_swap.protocol import ProtocolParams
from hybrid_swap.sweep import SweepSpec
from hybrid_swap.utils.config_manager import ConfigManager


@pytest.fixture
def phi_plus_density():
    """|Phi+><Phi+| on two qubits"""
    return DensityMatrix.from_pure(bell_state("phi+"), (2, 2))


@pytest.fixture
def maximally_mixed():
    """I/4 on two qubits"""
    return DensityMatrix(dims=(2, 2), entries=np.eye(4) / 4)


@pytest.fixture
def product_density():
    """|+>|0> as a density matrix"""
    return DensityMatrix.from_pure(np.kron([1.0, 1.0], [1.0, 0.0]), (2, 2))


@pytest.fixture
def headline_params():
    """Parameters near the mismatch peak"""
    return ProtocolParams(alpha=1.5, T=0.99, delta=0.01)


@pytest.fixture
def temp_config(tmp_path):
    """ConfigManager pointing at a config file that does not exist yet"""
    return ConfigManager(str(tmp_path / "hybrid_swap_config.json"))


@pytest.fixture
def small_spec(tmp_path):
    """A sweep small enough for unit tests"""
    return SweepSpec(
        alpha_start=1.0,
        alpha_stop=1.5,
        alpha_step=0.25,
        transmissions=[0.99],
        mismatch_widths=[0.0, 0.01],
        formats={"csv", "json", "svg"},
        output=str(tmp_path / "out" / "sweep"),
    )
