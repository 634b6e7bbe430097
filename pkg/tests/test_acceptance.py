"""
End-to-end reproduction checks on full alpha curves
"""

import numpy as np
import pytest

from hybrid_swap.protocol import ProtocolParams, success_probability
from hybrid_swap.sweep import SweepSpec, complementarity_report, find_peak, run_sweep


def _curve(T, Delta=0.0, fixed_delta=None, start=0.0, stop=4.0):
    spec = SweepSpec(
        alpha_start=start, alpha_stop=stop, alpha_step=0.05,
        transmissions=[T], mismatch_widths=[Delta], fixed_delta=fixed_delta,
    )
    return run_sweep(spec)


def test_no_loss_saturation():
    """Without loss the negativity stays above 0.99 from alpha = 1.7 on"""
    records = _curve(1.0, start=1.7)
    assert min(r.negativity for r in records) >= 0.99


@pytest.mark.parametrize(
    "T,value_range,alpha_range",
    [(0.99, (0.85, 0.89), (1.35, 1.65)), (0.95, (0.61, 0.65), (1.15, 1.45))],
)
def test_mismatch_peaks(T, value_range, alpha_range):
    peak = find_peak(_curve(T, 0.01), T, 0.01)
    assert value_range[0] <= peak.negativity <= value_range[1]
    assert alpha_range[0] <= peak.alpha <= alpha_range[1]


@pytest.mark.parametrize("T,low,high", [(0.99, 0.91, 0.95), (0.95, 0.79, 0.83)])
def test_fidelity_peaks_with_fixed_mismatch(T, low, high):
    records = _curve(T, fixed_delta=0.01)
    best = max(records, key=lambda r: r.fidelity)
    assert low <= best.fidelity <= high
    assert 1.0 <= best.alpha <= 1.8


def test_success_probability_plateau():
    assert success_probability(ProtocolParams(alpha=0.0, T=0.99)) == pytest.approx(1.0, abs=1e-6)
    for T in (1.0, 0.99, 0.95):
        assert success_probability(ProtocolParams(alpha=3.0, T=T)) == pytest.approx(0.5, abs=0.01)
        values = [success_probability(ProtocolParams(alpha=a, T=T)) for a in np.linspace(0.0, 3.0, 61)]
        assert all(b <= a + 1e-15 for a, b in zip(values, values[1:]))


def test_averaged_curves_stay_within_entropy_bound():
    records = _curve(0.99, 0.01)
    assert all(0.0 <= r.linear_entropy <= 0.75 for r in records)
    assert all(0.0 <= r.success_prob <= 1.0 for r in records)


@pytest.mark.parametrize("T,alpha_range", [(0.99, (1.35, 1.65)), (0.95, (1.15, 1.45))])
def test_complementarity_report_on_mismatch_curve(T, alpha_range):
    """Linear entropy grows with alpha, so its minimum sits at the lower edge, away from the negativity peak"""
    report = complementarity_report(_curve(T, 0.01), T, 0.01)
    assert alpha_range[0] <= report["alpha_max_negativity"] <= alpha_range[1]
    assert report["alpha_min_linear_entropy"] == pytest.approx(0.5)
    expected_gap = (report["alpha_max_negativity"] - 0.5) / 0.05
    assert report["gap_steps"] == pytest.approx(expected_gap)
    assert report["gap_steps"] > 10
