"""
Tests for sweep grids, evaluation and result helpers
"""

import json
from unittest.mock import patch

import numpy as np
import pytest

from hybrid_swap.errors import OracleMismatchError
from hybrid_swap.fock import DensityMatrix
from hybrid_swap.sweep import (
    SweepRecord,
    SweepSpec,
    complementarity_report,
    evaluate_point,
    find_peak,
    _point_params,
    oracle_check_point,
    run_sweep,
    select_curve,
)
from hybrid_swap.utils.config_manager import ConfigManager


def test_default_alpha_grid():
    values = SweepSpec().alpha_values()
    assert len(values) == 81
    assert values[0] == 0.0
    assert values[3] == 0.15
    assert values[-1] == 4.0


def test_grid_is_alpha_major():
    spec = SweepSpec(alpha_start=1.0, alpha_stop=1.1, alpha_step=0.1, transmissions=[1.0, 0.99], mismatch_widths=[0.0, 0.01])
    grid = spec.grid()
    assert len(grid) == 8
    assert grid[:4] == [(1.0, 1.0, 0.0), (1.0, 1.0, 0.01), (1.0, 0.99, 0.0), (1.0, 0.99, 0.01)]
    assert grid[4][0] == 1.1


def test_fixed_delta_replaces_widths():
    spec = SweepSpec(fixed_delta=0.01, transmissions=[0.99, 0.95])
    assert spec.width_values == [0.01]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha_start": 2.0, "alpha_stop": 1.0},
        {"alpha_start": 0.0, "alpha_stop": 0.1, "alpha_step": 0.5},
        {"alpha_step": 0.0},
        {"transmissions": [1.2]},
        {"transmissions": []},
        {"mismatch_widths": [-0.01]},
        {"formats": {"pdf"}},
        {"fixed_delta": 0.95, "transmissions": [1.0, 0.95]},
    ],
)
def test_invalid_specs_rejected(kwargs):
    with pytest.raises(ValueError):
        SweepSpec(**kwargs)


def test_from_config_precedence(tmp_path):
    """Project defaults < run configuration < explicit overrides"""
    manager = ConfigManager(str(tmp_path / "missing.json"))
    spec = SweepSpec.from_config(
        manager,
        run_config={"alpha_step": "0.1", "transmission": "0.99, 0.95", "workers": "4"},
        overrides={"alpha_step": 0.2, "transmissions": None},
    )
    assert spec.alpha_step == 0.2
    assert spec.transmissions == [0.99, 0.95]
    assert spec.mismatch_widths == [0.0, 0.001, 0.01, 0.1]


def test_from_config_uses_project_file(tmp_path):
    path = tmp_path / "hybrid_swap_config.json"
    path.write_text(json.dumps({"sweep": {"alpha_stop": 2.0, "formats": ["csv", "json"]}}))
    spec = SweepSpec.from_config(ConfigManager(str(path)))
    assert spec.alpha_stop == 2.0
    assert spec.formats == {"csv", "json"}
    assert spec.alpha_step == 0.05


def test_from_config_carries_truncation_settings(tmp_path):
    """Numerics truncation settings reach the per-point protocol parameters"""
    path = tmp_path / "hybrid_swap_config.json"
    path.write_text(json.dumps({"numerics": {"epsilon_trunc": 1e-3, "strict_truncation": False}}))
    spec = SweepSpec.from_config(ConfigManager(str(path)))
    assert spec.epsilon_trunc == 1e-3
    assert spec.strict_truncation is False

    params = _point_params(1.5, 0.99, 0.01, spec)
    assert params.epsilon_trunc == 1e-3
    assert params.strict_truncation is False


def test_run_config_overrides_truncation_settings(temp_config):
    spec = SweepSpec.from_config(temp_config, run_config={"epsilon_trunc": "1e-6", "strict_truncation": "false"})
    assert spec.epsilon_trunc == 1e-6
    assert spec.strict_truncation is False
    assert SweepSpec.from_config(temp_config).strict_truncation is True


def test_from_config_rejects_unknown_keys(temp_config):
    with pytest.raises(ValueError, match="Unknown run configuration key"):
        SweepSpec.from_config(temp_config, run_config={"alpha_sart": "0.1"})
    with pytest.raises(ValueError, match="Invalid value"):
        SweepSpec.from_config(temp_config, run_config={"alpha_start": "zero"})


def test_evaluate_point_without_loss():
    record = evaluate_point(2.0, 1.0, 0.0, SweepSpec())
    assert record.negativity == pytest.approx(np.tanh(4.0), abs=1e-10)
    assert record.linear_entropy == pytest.approx(0.0, abs=1e-10)
    assert record.success_prob == pytest.approx(0.5 * (1 + np.exp(-8.0)))


def test_evaluate_point_fixed_delta_uses_delta_directly():
    spec = SweepSpec(fixed_delta=0.01, transmissions=[0.99])
    fixed = evaluate_point(1.5, 0.99, 0.01, spec)
    averaged = evaluate_point(1.5, 0.99, 0.01, SweepSpec(transmissions=[0.99]))
    assert fixed.Delta == averaged.Delta == 0.01
    assert fixed.negativity != pytest.approx(averaged.negativity, abs=1e-6)


def test_run_sweep_order_and_size(small_spec):
    records = run_sweep(small_spec)
    assert len(records) == len(small_spec.grid())
    assert [(r.alpha, r.T, r.Delta) for r in records] == small_spec.grid()


def test_run_sweep_parallel_matches_serial(small_spec):
    serial = run_sweep(small_spec)
    parallel = run_sweep(small_spec, workers=2)
    for a, b in zip(serial, parallel):
        assert (a.alpha, a.T, a.Delta) == (b.alpha, b.T, b.Delta)
        assert a.negativity == pytest.approx(b.negativity, abs=1e-14)
        assert a.linear_entropy == pytest.approx(b.linear_entropy, abs=1e-14)


def test_run_sweep_rejects_bad_worker_count(small_spec):
    with pytest.raises(ValueError):
        run_sweep(small_spec, workers=0)


def test_oracle_check_passes(small_spec):
    spec = small_spec.model_copy(update={"oracle_check": True, "oracle_stride": 3})
    assert len(run_sweep(spec)) == len(spec.grid())
    assert oracle_check_point(1.5, 0.99, 0.01, spec) < 1e-8


def test_oracle_mismatch_names_grid_point(small_spec):
    spec = small_spec.model_copy(update={"oracle_check": True})
    mixed = DensityMatrix(dims=(2, 2), entries=np.eye(4) / 4)
    with patch("hybrid_swap.sweep.oracle_density", return_value=mixed):
        with pytest.raises(OracleMismatchError) as exc_info:
            run_sweep(spec)
    assert exc_info.value.grid_point == {"alpha": 1.0, "T": 0.99, "Delta": 0.0}
    assert exc_info.value.distance > 1e-8


def _records(values):
    return [
        SweepRecord(alpha=a, T=0.99, Delta=0.01, negativity=n, fidelity=0.5, linear_entropy=s, success_prob=0.5)
        for a, n, s in values
    ]


def test_select_curve_and_peak():
    records = _records([(1.0, 0.5, 0.1), (0.5, 0.2, 0.05), (1.5, 0.4, 0.2)])
    curve = select_curve(records, 0.99, 0.01)
    assert [r.alpha for r in curve] == [0.5, 1.0, 1.5]
    assert find_peak(records, 0.99, 0.01).alpha == 1.0
    with pytest.raises(ValueError):
        find_peak(records, 0.95, 0.01)


def test_complementarity_report():
    records = _records([(0.5, 0.3, 0.01), (1.0, 0.6, 0.05), (1.5, 0.5, 0.1)])
    report = complementarity_report(records, 0.99, 0.01)
    assert report["alpha_max_negativity"] == 1.0
    assert report["alpha_min_linear_entropy"] == 0.5
    assert report["gap_steps"] == pytest.approx(1.0)
    with pytest.raises(ValueError):
        complementarity_report(records, 0.99, 0.01, alpha_min=1.4)
