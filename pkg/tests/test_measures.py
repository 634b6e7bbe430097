"""
Tests for negativity, fidelity, linear entropy and the homodyne signal
"""

import cmath

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import unitary_group

from hybrid_swap.fock import DensityMatrix, coherent_fock_vector, vacuum_fock_vector
from hybrid_swap.measures import (
    PHI_PLUS,
    MeasureSet,
    bell_state,
    evaluate_measures,
    fidelity,
    intensity_difference_expectation,
    linear_entropy,
    negativity,
)


@pytest.mark.parametrize("name", ["phi+", "phi-", "psi+", "psi-"])
def test_bell_states_are_maximally_entangled(name):
    rho = DensityMatrix.from_pure(bell_state(name), (2, 2))
    assert negativity(rho) == pytest.approx(1.0)
    assert linear_entropy(rho) == pytest.approx(0.0, abs=1e-15)
    assert fidelity(rho, bell_state(name)) == pytest.approx(1.0)


def test_bell_state_names():
    assert np.allclose(bell_state("PHI_PLUS"), PHI_PLUS)
    with pytest.raises(ValueError):
        bell_state("ghz")


def test_product_state_measures(product_density):
    assert negativity(product_density) == 0.0
    assert linear_entropy(product_density) == pytest.approx(0.0, abs=1e-15)
    assert fidelity(product_density, PHI_PLUS) == pytest.approx(0.25)


def test_maximally_mixed_state(maximally_mixed):
    assert negativity(maximally_mixed) == 0.0
    assert fidelity(maximally_mixed, PHI_PLUS) == pytest.approx(0.25)
    assert linear_entropy(maximally_mixed) == pytest.approx(0.75)


def test_classical_mixture_is_separable():
    rho = DensityMatrix(dims=(2, 2), entries=np.diag([0.5, 0.0, 0.0, 0.5]))
    assert negativity(rho) == 0.0
    assert linear_entropy(rho) == pytest.approx(0.5)


def test_werner_state_negativity():
    """p |Phi+><Phi+| + (1 - p) I/4 has negativity (3p - 1)/2 above p = 1/3"""
    p = 0.6
    entries = p * np.outer(PHI_PLUS, PHI_PLUS.conj()) + (1 - p) * np.eye(4) / 4
    assert negativity(entries) == pytest.approx((3 * p - 1) / 2)


def test_fidelity_normalizes_target(phi_plus_density):
    assert fidelity(phi_plus_density, [1.0, 0.0, 0.0, 1.0]) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        fidelity(phi_plus_density, [1.0, 0.0])


def test_negativity_needs_two_qubits():
    with pytest.raises(ValueError):
        negativity(np.eye(3) / 3)


def test_non_hermitian_input_rejected():
    with pytest.raises(ValueError):
        negativity(np.array([[0.5, 0.1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0.5]]))


def test_linear_entropy_is_unitarily_invariant():
    rng = np.random.default_rng(11)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = DensityMatrix(dims=(2, 2), entries=m @ m.conj().T).normalized()
    u = unitary_group.rvs(4, random_state=5)
    assert linear_entropy(rho.conjugated(u)) == pytest.approx(linear_entropy(rho), abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(
    p=st.floats(min_value=0.0, max_value=1.0),
    q=st.floats(min_value=0.0, max_value=1.0),
    phase=st.floats(min_value=0.0, max_value=2 * np.pi),
)
def test_measures_stay_in_range(p, q, phase):
    """Mixtures of a Bell state, a product state and noise keep every measure in range"""
    bell = np.outer(PHI_PLUS, PHI_PLUS.conj())
    tilted = np.array([1.0, 0.0, 0.0, cmath.exp(1j * phase)]) / np.sqrt(2)
    mixture = p * bell + (1 - p) * (q * np.outer(tilted, tilted.conj()) + (1 - q) * np.eye(4) / 4)
    measures = evaluate_measures(DensityMatrix(dims=(2, 2), entries=mixture), success_prob=0.5)
    assert 0.0 <= measures.negativity <= 1.0
    assert 0.0 <= measures.fidelity <= 1.0
    assert 0.0 <= measures.linear_entropy <= 0.75


def test_measure_set_clips_roundoff():
    measures = MeasureSet(negativity=1.0 + 1e-12, fidelity=-1e-13, linear_entropy=0.75 + 1e-12, success_prob=0.5)
    assert measures.negativity == 1.0
    assert measures.fidelity == 0.0
    assert measures.linear_entropy == 0.75


def test_measure_set_rejects_out_of_range():
    with pytest.raises(ValueError):
        MeasureSet(negativity=1.5, fidelity=0.5, linear_entropy=0.1, success_prob=0.5)
    with pytest.raises(ValueError):
        MeasureSet(negativity=0.5, fidelity=0.5, linear_entropy=0.8, success_prob=0.5)
    with pytest.raises(ValueError):
        MeasureSet(negativity=0.5, fidelity=0.5, linear_entropy=0.1, success_prob=float("nan"))


def test_evaluate_measures_default_target(phi_plus_density):
    measures = evaluate_measures(phi_plus_density, success_prob=0.3)
    assert measures.fidelity == pytest.approx(1.0)
    assert measures.success_prob == 0.3
    assert measures.dim == 4


def test_intensity_difference_of_vacuum():
    assert intensity_difference_expectation(vacuum_fock_vector(5), 10.0, 0.3) == 0.0


def test_intensity_difference_in_and_out_of_phase():
    alpha = cmath.rect(1.0, 0.4)
    vector = coherent_fock_vector(alpha, 30)
    assert intensity_difference_expectation(vector, 10.0, 0.4) == pytest.approx(20.0, abs=1e-9)
    assert intensity_difference_expectation(vector, 10.0, 0.4 + np.pi / 2) == pytest.approx(0.0, abs=1e-9)
    assert intensity_difference_expectation(alpha, 10.0, 0.4) == pytest.approx(20.0)


def test_intensity_difference_rejects_negative_oscillator():
    with pytest.raises(ValueError):
        intensity_difference_expectation(0.5, -1.0, 0.0)
