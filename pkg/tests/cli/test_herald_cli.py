import json

import pytest
from typer.testing import CliRunner

from hybrid_swap.cli import app

runner = CliRunner()


def test_herald_command_exists():
    """Test that the herald command exists"""
    result = runner.invoke(app, ["herald", "--help"])
    assert result.exit_code == 0
    assert "--p-c" in result.stdout


def test_herald_json():
    result = runner.invoke(app, ["herald", "--p-c", "0.3", "--eta", "0.3", "--alpha", "1.0", "--json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["branch_weights"]["G"] == pytest.approx(0.5, abs=1e-10)
    assert "state" not in data


def test_herald_table():
    result = runner.invoke(app, ["herald", "--p-c", "0.1", "--eta", "0.2", "-a", "1.0", "-k", "2"])
    assert result.exit_code == 0
    assert "herald probability" in result.stdout


def test_herald_impossible_outcome_exits_with_one():
    result = runner.invoke(app, ["herald", "--p-c", "0", "--eta", "0", "-a", "1.0", "-k", "1"])
    assert result.exit_code == 1


def test_herald_invalid_probability_exits_with_one():
    result = runner.invoke(app, ["herald", "--p-c", "1.5", "--eta", "0.1", "-a", "1.0"])
    assert result.exit_code == 1


def test_herald_three_photon_outcome_exits_with_one():
    result = runner.invoke(app, ["herald", "--p-c", "0.5", "--eta", "0.5", "-a", "1.0", "-k", "3"])
    assert result.exit_code == 1
    assert "probability 0" in result.stdout
