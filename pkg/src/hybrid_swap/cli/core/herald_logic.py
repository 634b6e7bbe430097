import json
import logging
from typing import Optional

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from hybrid_swap.protocol import HeraldParams, HeraldResult, herald_hybrid_state

logger = logging.getLogger(__name__)
console = Console()


def display_herald(params: HeraldParams, result: HeraldResult, json_output: bool = False) -> None:
    summary = result.model_dump(exclude={"state"})
    if json_output:
        console.print_json(json.dumps(summary))
        return

    table = Table(title=f"Herald outcome {params.herald_outcome} (p_c={params.p_c:g}, eta={params.eta:g}, alpha={params.alpha:g})")
    table.add_column("Quantity", style="green")
    table.add_column("Value", justify="right")
    table.add_row("herald probability", f"{result.probability:.6g}")
    table.add_row("|G> branch weight", f"{result.branch_weights['G']:.6g}")
    table.add_row("|W> branch weight", f"{result.branch_weights['W']:.6g}")
    table.add_row("overlap with target(alpha)", f"{result.target_overlap:.6g}")
    table.add_row("best target alpha'", f"{result.best_target_alpha:.6g}")
    table.add_row("overlap with target(alpha')", f"{result.best_target_overlap:.6g}")
    console.print(table)


def run_herald(p_c: float, eta: float, alpha: float, outcome: int, n_trunc: Optional[int], json_output: bool) -> int:
    """Returns the process exit code"""
    try:
        params = HeraldParams(p_c=p_c, eta=eta, alpha=alpha, herald_outcome=outcome, n_trunc=n_trunc)
        result = herald_hybrid_state(params)
    except (ValidationError, ValueError) as e:
        logger.error(f"Herald computation failed: {e}")
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        return 1
    display_herald(params, result, json_output)
    return 0
