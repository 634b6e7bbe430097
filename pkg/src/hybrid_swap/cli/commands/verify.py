import logging

import typer

from hybrid_swap.cli.core import verify_logic

logger = logging.getLogger(__name__)


def verify_command(
    quick: bool = typer.Option(False, "--quick", "-q", help="Check the oracle on every third alpha only."),
):
    """
    Run the reproduction and oracle-equivalence checks.

    Exit code 0 when all checks pass, 2 when the analytic and circuit states
    disagree, 1 for any other failure.
    """
    logger.info("Executing 'verify' command")
    results = verify_logic.run_checks(quick=quick)
    verify_logic.display_results(results)
    code = verify_logic.exit_code(results)
    if code == 0:
        typer.echo(typer.style("All checks passed.", fg=typer.colors.GREEN))
    else:
        raise typer.Exit(code=code)
