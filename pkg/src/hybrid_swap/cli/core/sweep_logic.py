import logging
from typing import Any, Dict, List, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from hybrid_swap.errors import OracleMismatchError
from hybrid_swap.sweep import SweepRecord, SweepSpec, find_peak, run_sweep
from hybrid_swap.utils.config_manager import ConfigManager, load_run_config
from hybrid_swap.utils.report_generator import emit_outputs

logger = logging.getLogger(__name__)
console = Console()

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ORACLE_MISMATCH = 2


def build_spec(config_path: Optional[str], overrides: Dict[str, Any]) -> SweepSpec:
    """Project defaults < run-config file < flags"""
    run_config = load_run_config(config_path) if config_path else {}
    return SweepSpec.from_config(ConfigManager(), run_config, overrides)


def display_peaks(records: List[SweepRecord], spec: SweepSpec) -> None:
    table = Table(title="Negativity peaks")
    table.add_column("T", justify="right")
    table.add_column("delta" if spec.fixed_delta is not None else "Delta", justify="right")
    table.add_column("alpha at peak", justify="right", style="green")
    table.add_column("negativity", justify="right")
    table.add_column("fidelity", justify="right")
    for T in spec.transmissions:
        for Delta in spec.width_values:
            peak = find_peak(records, T, Delta)
            table.add_row(f"{T:g}", f"{Delta:g}", f"{peak.alpha:g}", f"{peak.negativity:.6f}", f"{peak.fidelity:.6f}")
    console.print(table)


def run_sweep_command(config_path: Optional[str], overrides: Dict[str, Any], workers: int = 1) -> int:
    """
    Build the sweep settings, run them and write the outputs

    Args:
        config_path: Optional run-config file of key=value lines
        overrides: Typed command-line values; None entries are ignored
        workers: Number of worker processes

    Returns:
        0 on success, 1 for invalid input or write failures, 2 for an oracle mismatch
    """
    try:
        spec = build_spec(config_path, overrides)
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid sweep configuration: {e}")
        console.print(f"[red]Error: invalid sweep configuration: {escape(str(e))}[/red]")
        return EXIT_INVALID

    try:
        records = run_sweep(spec, workers=workers)
    except OracleMismatchError as e:
        logger.error(f"{e} (grid point {e.grid_point})")
        console.print(f"[red]Oracle check failed: {escape(str(e))}[/red]")
        return EXIT_ORACLE_MISMATCH
    except ValueError as e:
        logger.error(f"Sweep failed: {e}")
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        return EXIT_INVALID

    try:
        paths = emit_outputs(records, spec)
    except ValueError as e:
        logger.error(f"Could not write outputs: {e}")
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        return EXIT_INVALID

    display_peaks(records, spec)
    for path in paths:
        console.print(f"[green]Wrote {path}[/green]")
    return EXIT_OK
