import os
import json

import pytest

from hybrid_swap.utils.config_manager import (
    ConfigManager,
    load_run_config,
    normalize_key,
    parse_bool,
    parse_float_list,
)


def test_missing_config_uses_defaults(temp_config):
    """ConfigManager falls back to defaults without writing a file"""
    assert not os.path.exists(temp_config.config_path)
    assert temp_config.get_sweep_settings()["alpha_step"] == 0.05
    assert temp_config.get_numerics()["oracle_stride"] == 10
    assert temp_config.get("protocol", "phase_corrected") is True


def test_file_values_override_defaults(tmp_path):
    """Values in the file win, missing keys keep their defaults"""
    config_path = os.path.join(tmp_path, "config.json")
    with open(config_path, "w") as f:
        json.dump({"numerics": {"quad_points": 128}, "bogus": {}}, f)
    config = ConfigManager(config_path)
    assert config.get_numerics()["quad_points"] == 128
    assert config.get_numerics()["epsilon_branch"] == 1e-14


def test_unreadable_config_falls_back(tmp_path):
    config_path = os.path.join(tmp_path, "config.json")
    with open(config_path, "w") as f:
        f.write("{not json")
    config = ConfigManager(config_path)
    assert config.config == ConfigManager.DEFAULT_CONFIG


def test_save_config_writes_to_file(tmp_path):
    """Test that save_config writes config to file"""
    config_path = os.path.join(tmp_path, "config.json")
    config = ConfigManager(config_path)
    config.set("sweep", "alpha_stop", 2.5)
    assert config.save_config()
    with open(config_path) as f:
        assert json.load(f)["sweep"]["alpha_stop"] == 2.5


def test_defaults_are_not_shared(temp_config):
    temp_config.set("sweep", "alpha_stop", 9.0)
    assert ConfigManager.DEFAULT_CONFIG["sweep"]["alpha_stop"] == 4.0


def test_get_section_unknown(temp_config):
    with pytest.raises(ValueError):
        temp_config.get_section("providers")
    assert temp_config.get("providers", "anything", "fallback") == "fallback"


def test_normalize_key():
    assert normalize_key("--alpha-start") == "alpha_start"
    assert normalize_key(" ALPHA_STEP ") == "alpha_step"


def test_load_run_config(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("# grid\nalpha-start=0.5\nTRANSMISSION=0.99,0.95\nout=results/run\n")
    settings = load_run_config(str(path))
    assert settings == {"alpha_start": "0.5", "transmission": "0.99,0.95", "out": "results/run"}


def test_load_run_config_missing(tmp_path):
    with pytest.raises(ValueError):
        load_run_config(str(tmp_path / "missing.env"))


def test_parse_float_list():
    assert parse_float_list("0.99, 0.95") == [0.99, 0.95]
    assert parse_float_list(1) == [1.0]
    assert parse_float_list(["0.1", 0.2]) == [0.1, 0.2]
    with pytest.raises(ValueError):
        parse_float_list("0.99,high")


def test_parse_bool():
    assert parse_bool("yes") is True
    assert parse_bool("0") is False
    assert parse_bool(True) is True
    with pytest.raises(ValueError):
        parse_bool("maybe")
