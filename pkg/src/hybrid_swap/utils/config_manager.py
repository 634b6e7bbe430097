"""
Configuration manager for hybrid-swap
"""

import copy
import logging
import math
import os
from typing import Any, Dict, List, Optional

from dotenv import dotenv_values

from .common import get_default_config_path, read_json_file, write_json_file

logger = logging.getLogger(__name__)


class ConfigManager:
    """Project defaults for sweeps, numerics and protocol settings"""

    DEFAULT_CONFIG = {
        "sweep": {
            "alpha_start": 0.0,
            "alpha_stop": 4.0,
            "alpha_step": 0.05,
            "transmissions": [1.0, 0.99, 0.95],
            "mismatch_widths": [0.0, 0.001, 0.01, 0.1],
            "formats": ["csv"],
            "output": "results/sweep",
        },
        "numerics": {
            "epsilon_trunc": 1e-12,
            "epsilon_branch": 1e-14,
            "quad_points": 64,
            "oracle_tolerance": 1e-8,
            "oracle_stride": 10,
            "strict_truncation": True,
        },
        "protocol": {
            "x": 0.0,
            "theta": math.pi / 2,
            "phase_corrected": True,
        },
    }

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or get_default_config_path()
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load config from file, falling back to the defaults for anything missing"""
        config = copy.deepcopy(self.DEFAULT_CONFIG)
        if not os.path.exists(self.config_path):
            logger.debug(f"No config file at {self.config_path}; using defaults")
            return config

        data = read_json_file(self.config_path)
        if not isinstance(data, dict):
            logger.warning(f"Ignoring unreadable config file {self.config_path}")
            return config

        for section, values in data.items():
            if section in config and isinstance(values, dict):
                config[section].update(values)
            else:
                logger.warning(f"Unknown config section '{section}' in {self.config_path}")
        return config

    def save_config(self) -> bool:
        """Save current config to file"""
        return write_json_file(self.config_path, self.config)

    def get_section(self, section: str) -> Dict[str, Any]:
        if section not in self.config:
            raise ValueError(f"Unknown config section '{section}'")
        return dict(self.config[section])

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.config.get(section, {}).get(key, default)

    def set(self, section: str, key: str, value: Any) -> None:
        self.config.setdefault(section, {})[key] = value

    def get_sweep_settings(self) -> Dict[str, Any]:
        return self.get_section("sweep")

    def get_numerics(self) -> Dict[str, Any]:
        return self.get_section("numerics")

    def get_protocol_defaults(self) -> Dict[str, Any]:
        return self.get_section("protocol")


# --- Flat run-configuration files ---

def normalize_key(key: str) -> str:
    """'--alpha-start', 'alpha_start' and 'ALPHA_START' all map to 'alpha_start'"""
    return key.strip().lstrip("-").replace("-", "_").lower()


def load_run_config(path: str) -> Dict[str, str]:
    """
    Read a flat key=value run configuration.

    Keys mirror the command-line flags of `hybrid-swap sweep`; values stay
    strings and are converted by the caller.
    """
    if not os.path.exists(path):
        raise ValueError(f"Run configuration file not found: {path}")
    values = dotenv_values(path)
    settings = {normalize_key(key): value for key, value in values.items() if value is not None}
    logger.info(f"Loaded {len(settings)} settings from {path}")
    return settings


def parse_float_list(value: Any) -> List[float]:
    """Comma separated string, single number or list -> list of floats"""
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    if isinstance(value, (int, float)):
        return [float(value)]
    parts = [part.strip() for part in str(value).split(",") if part.strip()]
    try:
        return [float(part) for part in parts]
    except ValueError:
        raise ValueError(f"Expected a comma separated list of numbers, got '{value}'")


def parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(f"Expected a boolean, got '{value}'")
