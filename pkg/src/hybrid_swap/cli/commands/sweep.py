import logging
from typing import List, Optional

import typer

from hybrid_swap.cli.core import sweep_logic
from hybrid_swap.utils.config_manager import parse_float_list

logger = logging.getLogger(__name__)


def _float_list(values: Optional[List[str]]) -> Optional[List[float]]:
    # accepts repeated flags as well as comma separated values
    if not values:
        return None
    return [v for value in values for v in parse_float_list(value)]


def sweep_command(
    alpha_start: Optional[float] = typer.Option(None, "--alpha-start", help="First alpha of the grid."),
    alpha_stop: Optional[float] = typer.Option(None, "--alpha-stop", help="Last alpha of the grid."),
    alpha_step: Optional[float] = typer.Option(None, "--alpha-step", help="Alpha grid step."),
    transmission: Optional[List[str]] = typer.Option(None, "--transmission", "-t", help="Transmissions T; repeat or comma separate."),
    mismatch_width: Optional[List[str]] = typer.Option(None, "--mismatch-width", "-D", help="Mismatch widths Delta; repeat or comma separate."),
    fixed_delta: Optional[float] = typer.Option(None, "--fixed-delta", help="Use this mismatch directly instead of averaging over Delta."),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Output path without extension."),
    output_format: Optional[List[str]] = typer.Option(None, "--format", "-f", help="csv, json or svg; repeat or comma separate."),
    oracle_check: Optional[bool] = typer.Option(None, "--oracle-check/--no-oracle-check", help="Cross-check every 10th grid point against the Fock-space circuit."),
    config: Optional[str] = typer.Option(None, "--config", "-c", help="Flat key=value run configuration file."),
    workers: int = typer.Option(1, "--workers", "-w", min=1, help="Worker processes for grid evaluation."),
):
    """
    Sweep (alpha, T, Delta) grids and write CSV, JSON and SVG outputs.
    """
    logger.info("Executing 'sweep' command")
    try:
        overrides = {
            "alpha_start": alpha_start,
            "alpha_stop": alpha_stop,
            "alpha_step": alpha_step,
            "transmissions": _float_list(transmission),
            "mismatch_widths": _float_list(mismatch_width),
            "fixed_delta": fixed_delta,
            "output": out,
            "formats": {f.strip() for value in output_format for f in value.split(",") if f.strip()} if output_format else None,
            "oracle_check": oracle_check,
        }
    except ValueError as e:
        typer.echo(typer.style(f"Error: {e}", fg=typer.colors.RED), err=True)
        raise typer.Exit(code=1)

    code = sweep_logic.run_sweep_command(config, overrides, workers=workers)
    if code != 0:
        raise typer.Exit(code=code)
