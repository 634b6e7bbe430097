import logging
from typing import Optional

import typer

from hybrid_swap.cli.core import point_logic

logger = logging.getLogger(__name__)


def point_command(
    alpha: float = typer.Option(..., "--alpha", "-a", help="Coherent amplitude alpha (>= 0)."),
    transmission: float = typer.Option(..., "--transmission", "-t", help="Channel transmission T in (0, 1]."),
    delta: Optional[float] = typer.Option(None, "--delta", "-d", help="Fixed loss mismatch delta (second channel transmits T - delta)."),
    mismatch_width: Optional[float] = typer.Option(None, "--mismatch-width", "-D", help="Average over a one-sided Gaussian mismatch of this width."),
    x: Optional[float] = typer.Option(None, "--x", help="Homodyne outcome (default from config)."),
    theta: Optional[float] = typer.Option(None, "--theta", help="Homodyne angle in radians (default pi/2)."),
    phase_corrected: Optional[bool] = typer.Option(None, "--phase-correction/--no-phase-correction", help="Remove the outcome-dependent local phases."),
    swap_channels: bool = typer.Option(False, "--swap-channels", help="Put the mismatch on channel B instead of D."),
    oracle: bool = typer.Option(False, "--oracle", help="Also report the trace distance to the Fock-space circuit."),
    json_output: bool = typer.Option(False, "--json", help="Print JSON instead of a table."),
):
    """
    Compute negativity, fidelity, linear entropy and success probability at one parameter set.
    """
    logger.info("Executing 'point' command")
    code = point_logic.run_point(
        alpha=alpha,
        transmission=transmission,
        delta=delta,
        mismatch_width=mismatch_width,
        x=x,
        theta=theta,
        phase_corrected=phase_corrected,
        swap_channels=swap_channels,
        with_oracle=oracle,
        json_output=json_output,
    )
    if code != 0:
        raise typer.Exit(code=code)
