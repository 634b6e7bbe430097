import logging
from typing import Optional

import typer

from hybrid_swap.cli.core import herald_logic

logger = logging.getLogger(__name__)


def herald_command(
    p_c: float = typer.Option(..., "--p-c", help="Single-photon probability of the atomic source."),
    eta: float = typer.Option(..., "--eta", help="Down-conversion efficiency."),
    alpha: float = typer.Option(..., "--alpha", "-a", help="Injected coherent amplitude."),
    outcome: int = typer.Option(1, "--outcome", "-k", help="Photon count detected in mode p (0, 1 or 2)."),
    n_trunc: Optional[int] = typer.Option(None, "--n-trunc", help="Fock cutoff for mode B (default automatic)."),
    json_output: bool = typer.Option(False, "--json", help="Print JSON instead of a table."),
):
    """
    Heralded hybrid-state diagnostics: herald probability, branch weights and target overlap.
    """
    logger.info("Executing 'herald' command")
    code = herald_logic.run_herald(p_c, eta, alpha, outcome, n_trunc, json_output)
    if code != 0:
        raise typer.Exit(code=code)
