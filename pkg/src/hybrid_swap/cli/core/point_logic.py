import json
import logging
from typing import Any, Dict, Optional

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from hybrid_swap.fock import trace_distance
from hybrid_swap.measures import evaluate_measures
from hybrid_swap.mismatch import MismatchSpec, averaged_density, averaged_success_probability
from hybrid_swap.protocol import (
    ProtocolParams,
    oracle_density,
    post_measurement_density,
    success_probability,
)
from hybrid_swap.utils.config_manager import ConfigManager

logger = logging.getLogger(__name__)
console = Console()


def build_params(
    alpha: float,
    transmission: float,
    delta: float = 0.0,
    x: Optional[float] = None,
    theta: Optional[float] = None,
    phase_corrected: Optional[bool] = None,
    swap_channels: bool = False,
    config_manager: Optional[ConfigManager] = None,
) -> ProtocolParams:
    """ProtocolParams from CLI values, filling gaps from the project config"""
    config_manager = config_manager or ConfigManager()
    protocol = config_manager.get_protocol_defaults()
    numerics = config_manager.get_numerics()
    return ProtocolParams(
        alpha=alpha,
        T=transmission,
        delta=delta,
        x=protocol["x"] if x is None else x,
        theta=protocol["theta"] if theta is None else theta,
        phase_corrected=protocol["phase_corrected"] if phase_corrected is None else phase_corrected,
        swap_channels=swap_channels,
        epsilon_branch=numerics["epsilon_branch"],
        epsilon_trunc=numerics["epsilon_trunc"],
        strict_truncation=numerics["strict_truncation"],
    )


def compute_point(
    params: ProtocolParams,
    mismatch_width: Optional[float] = None,
    with_oracle: bool = False,
    quad_points: int = 64,
) -> Dict[str, Any]:
    """
    Measures for one parameter set.

    Args:
        params: Protocol parameters
        mismatch_width: Average over this mismatch width, ignoring params.delta;
            None uses params.delta directly
        with_oracle: Also report the trace distance to the Fock-space circuit
        quad_points: Gauss-Legendre nodes for the mismatch average

    Returns:
        Dictionary of inputs and measures, ready for JSON output
    """
    if mismatch_width is not None:
        spec = MismatchSpec(Delta=mismatch_width, quad_points=quad_points)
        rho = averaged_density(params, spec)
        success = averaged_success_probability(params, spec)
    else:
        rho = post_measurement_density(params)
        success = success_probability(params)

    result: Dict[str, Any] = {
        "alpha": params.alpha,
        "T": params.T,
        "delta": params.delta if mismatch_width is None else None,
        "Delta": mismatch_width,
        **evaluate_measures(rho, success).model_dump(exclude={"dim"}),
    }
    if with_oracle:
        result["oracle_trace_distance"] = trace_distance(post_measurement_density(params), oracle_density(params))
    return result


def display_point(result: Dict[str, Any], json_output: bool = False) -> None:
    if json_output:
        console.print_json(json.dumps(result))
        return

    table = Table(title=f"alpha={result['alpha']:g}, T={result['T']:g}")
    table.add_column("Measure", style="green")
    table.add_column("Value", justify="right")
    for key in ("negativity", "fidelity", "linear_entropy", "success_prob", "oracle_trace_distance"):
        if key in result:
            table.add_row(key, f"{result[key]:.10g}")
    console.print(table)


def run_point(
    alpha: float,
    transmission: float,
    delta: Optional[float],
    mismatch_width: Optional[float],
    x: Optional[float],
    theta: Optional[float],
    phase_corrected: bool,
    swap_channels: bool,
    with_oracle: bool,
    json_output: bool,
) -> int:
    """Returns the process exit code"""
    if delta is not None and mismatch_width is not None:
        logger.error("--delta and --mismatch-width are mutually exclusive")
        console.print("[red]Error: give either --delta or --mismatch-width, not both.[/red]")
        return 1
    try:
        config_manager = ConfigManager()
        params = build_params(
            alpha, transmission, delta or 0.0, x, theta, phase_corrected, swap_channels, config_manager
        )
        result = compute_point(
            params, mismatch_width, with_oracle, quad_points=config_manager.get("numerics", "quad_points", 64)
        )
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid point parameters: {e}")
        console.print(f"[red]Error: {escape(str(e))}[/red]")
        return 1

    display_point(result, json_output)
    return 0
