"""
Tests for averaging over the one-sided Gaussian loss mismatch
"""

import math

import numpy as np
import pytest
from scipy import integrate

from hybrid_swap.errors import QuadratureError
from hybrid_swap.measures import negativity
from hybrid_swap.mismatch import (
    MismatchSpec,
    averaged_density,
    averaged_density_unnormalized,
    averaged_success_probability,
    mismatch_nodes,
    mismatch_weight,
    truncated_mass,
)
from hybrid_swap.protocol import ProtocolParams, post_measurement_density, success_probability


def test_weight_shape():
    Delta = 0.01
    assert mismatch_weight(0.0, Delta) == pytest.approx(math.sqrt(2 / (math.pi * Delta ** 2)))
    assert mismatch_weight(Delta, Delta) / mismatch_weight(0.0, Delta) == pytest.approx(math.exp(-0.5))


@pytest.mark.parametrize("Delta", [0.001, 0.01, 0.1])
def test_weight_is_normalized_on_half_line(Delta):
    value, _ = integrate.quad(mismatch_weight, 0.0, 40 * Delta, args=(Delta,), epsabs=1e-13)
    assert value == pytest.approx(1.0, abs=1e-10)


def test_weight_rejects_bad_arguments():
    with pytest.raises(ValueError):
        mismatch_weight(-0.1, 0.01)
    with pytest.raises(ValueError):
        mismatch_weight(0.1, 0.0)


def test_nodes_capture_truncated_mass():
    spec = MismatchSpec(Delta=0.01)
    deltas, weights = mismatch_nodes(spec, 0.99)
    assert len(deltas) == 64
    assert 0.0 < deltas.min() and deltas.max() < 0.06
    assert weights.sum() == pytest.approx(truncated_mass(spec, 0.99), abs=1e-12)
    assert truncated_mass(spec, 0.99) == pytest.approx(math.erf(6 / math.sqrt(2)))


def test_upper_cut_clamped_to_transmission(caplog):
    spec = MismatchSpec(Delta=0.5)
    assert spec.resolved_upper_cut(0.95) == 0.95
    with caplog.at_level("WARNING"):
        deltas, _ = mismatch_nodes(spec, 0.95)
    assert deltas.max() < 0.95
    assert "clamped" in caplog.text


def test_explicit_upper_cut_beyond_transmission_rejected():
    with pytest.raises(ValueError):
        MismatchSpec(Delta=0.01, upper_cut=1.2).resolved_upper_cut(0.99)


def test_zero_width_is_a_point_mass(headline_params):
    spec = MismatchSpec(Delta=0.0)
    exact = post_measurement_density(headline_params.with_updates(delta=0.0))
    assert np.array_equal(averaged_density(headline_params, spec).entries, exact.entries)
    assert averaged_success_probability(headline_params, spec) == success_probability(
        headline_params.with_updates(delta=0.0)
    )
    assert truncated_mass(spec, 0.99) == 1.0


def test_averaged_density_is_physical(headline_params):
    rho = averaged_density(headline_params, MismatchSpec(Delta=0.01))
    rho.check_physical()


def test_unnormalized_trace_is_captured_mass():
    params = ProtocolParams(alpha=1.5, T=0.95)
    spec = MismatchSpec(Delta=0.02)
    trace = averaged_density_unnormalized(params, spec).trace
    assert truncated_mass(spec, 0.95) - 1e-12 <= trace <= 1.0 + 1e-12


def test_quadrature_converges():
    params = ProtocolParams(alpha=2.0, T=0.95)
    coarse = averaged_density(params, MismatchSpec(Delta=0.1, quad_points=64))
    fine = averaged_density(params, MismatchSpec(Delta=0.1, quad_points=128))
    assert np.max(np.abs(coarse.entries - fine.entries)) < 1e-9


GRID_ALPHAS = [0.5, 1.0, 1.5, 2.5]


@pytest.mark.parametrize("alpha", GRID_ALPHAS)
@pytest.mark.parametrize("T", [0.99, 0.95])
def test_wider_mismatch_lowers_negativity(alpha, T):
    params = ProtocolParams(alpha=alpha, T=T)
    values = [negativity(averaged_density(params, MismatchSpec(Delta=D))) for D in (0.0, 0.001, 0.01, 0.1)]
    assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("alpha", GRID_ALPHAS)
@pytest.mark.parametrize("Delta", [0.01, 0.1])
def test_averaged_negativity_bounded_by_best_fixed_mismatch(alpha, Delta):
    """Negativity is convex, so mixing cannot beat the best single mismatch"""
    params = ProtocolParams(alpha=alpha, T=0.99)
    spec = MismatchSpec(Delta=Delta)
    deltas, _ = mismatch_nodes(spec, params.T)
    best = max(negativity(post_measurement_density(params.with_updates(delta=float(d)))) for d in deltas)
    assert negativity(averaged_density(params, spec)) <= best + 1e-12


def test_averaged_success_probability_between_extremes():
    params = ProtocolParams(alpha=1.5, T=0.95)
    spec = MismatchSpec(Delta=0.05)
    deltas, _ = mismatch_nodes(spec, params.T)
    values = [success_probability(params.with_updates(delta=float(d))) for d in deltas]
    averaged = averaged_success_probability(params, spec)
    assert min(values) - 1e-12 <= averaged <= max(values) + 1e-12


def test_non_finite_integrand_raises(monkeypatch, headline_params):
    monkeypatch.setattr("hybrid_swap.mismatch.success_probability", lambda params: float("nan"))
    with pytest.raises(QuadratureError):
        averaged_success_probability(headline_params, MismatchSpec(Delta=0.01))
