"""Reproduction and consistency checks run by `hybrid-swap verify`"""

import logging
from typing import Callable, List, Optional

import numpy as np
from pydantic import BaseModel, Field
from rich.console import Console
from rich.table import Table

from hybrid_swap.fock import DensityMatrix, trace_distance
from hybrid_swap.measures import bell_state, fidelity, linear_entropy, negativity
from hybrid_swap.mismatch import MismatchSpec, averaged_density
from hybrid_swap.protocol import (
    ProtocolParams,
    analytic_branches,
    equal_loss_branches,
    ideal_limit_density,
    oracle_density,
    post_measurement_density,
    success_probability,
)
from hybrid_swap.sweep import SweepRecord, SweepSpec, complementarity_report, find_peak, run_sweep

logger = logging.getLogger(__name__)
console = Console()

ORACLE = "oracle"
REPRODUCTION = "reproduction"
DIAGNOSTIC = "diagnostic"


class CheckResult(BaseModel):
    name: str
    category: str = Field(..., description="oracle, reproduction or diagnostic")
    passed: bool
    detail: str


def _curve(T: float, Delta: float = 0.0, fixed_delta: Optional[float] = None,
           start: float = 0.0, stop: float = 4.0, step: float = 0.05) -> List[SweepRecord]:
    spec = SweepSpec(
        alpha_start=start, alpha_stop=stop, alpha_step=step,
        transmissions=[T], mismatch_widths=[Delta], fixed_delta=fixed_delta,
    )
    return run_sweep(spec)


def check_no_loss_saturation(quick: bool = False) -> CheckResult:
    records = _curve(1.0, start=1.7, stop=4.0)
    lowest = min(r.negativity for r in records)
    return CheckResult(
        name="no-loss saturation", category=REPRODUCTION, passed=lowest >= 0.99,
        detail=f"min negativity on alpha in [1.7, 4] at T=1: {lowest:.6f}",
    )


def _peak_check(name: str, T: float, Delta: float, value_range, alpha_range) -> CheckResult:
    peak = find_peak(_curve(T, Delta), T, Delta)
    passed = value_range[0] <= peak.negativity <= value_range[1] and alpha_range[0] <= peak.alpha <= alpha_range[1]
    return CheckResult(
        name=name, category=REPRODUCTION, passed=passed,
        detail=f"T={T:g}, Delta={Delta:g}: peak negativity {peak.negativity:.4f} at alpha={peak.alpha:g}",
    )


def check_headline_mismatch(quick: bool = False) -> CheckResult:
    return _peak_check("mismatch peak", 0.99, 0.01, (0.85, 0.89), (1.35, 1.65))


def check_high_loss(quick: bool = False) -> CheckResult:
    return _peak_check("high-loss peak", 0.95, 0.01, (0.61, 0.65), (1.15, 1.45))


def check_fidelity_peaks(quick: bool = False) -> CheckResult:
    details = []
    passed = True
    for T, low, high in ((0.99, 0.91, 0.95), (0.95, 0.79, 0.83)):
        records = _curve(T, fixed_delta=0.01)
        best = max(records, key=lambda r: r.fidelity)
        passed = passed and low <= best.fidelity <= high
        details.append(f"T_B={T:g}, T_D={T - 0.01:g}: max F={best.fidelity:.4f} at alpha={best.alpha:g}")
    return CheckResult(name="fidelity peaks", category=REPRODUCTION, passed=passed, detail="; ".join(details))


def check_success_probability(quick: bool = False) -> CheckResult:
    at_zero = success_probability(ProtocolParams(alpha=0.0, T=0.99))
    passed = abs(at_zero - 1.0) <= 1e-6
    plateau = []
    for T in (1.0, 0.99, 0.95):
        value = success_probability(ProtocolParams(alpha=3.0, T=T))
        plateau.append(value)
        passed = passed and abs(value - 0.5) <= 0.01
        values = [success_probability(ProtocolParams(alpha=a, T=T)) for a in np.linspace(0.0, 3.0, 61)]
        passed = passed and all(b <= a + 1e-15 for a, b in zip(values, values[1:]))
    return CheckResult(
        name="success probability", category=REPRODUCTION, passed=passed,
        detail=f"P(0)={at_zero:.8f}, P(3)={', '.join(f'{p:.4f}' for p in plateau)}",
    )


def check_oracle_grid(quick: bool = False) -> CheckResult:
    alphas = np.arange(1, 13) * 0.25
    if quick:
        alphas = alphas[::3]
    worst = 0.0
    worst_point = None
    for alpha in alphas:
        for T in (1.0, 0.99, 0.95):
            for delta in (0.0, 0.01):
                params = ProtocolParams(alpha=float(alpha), T=T, delta=delta)
                distance = trace_distance(post_measurement_density(params), oracle_density(params))
                if distance > worst:
                    worst, worst_point = distance, (float(alpha), T, delta)
    count = len(alphas) * 6
    return CheckResult(
        name="oracle equivalence", category=ORACLE, passed=worst < 1e-8,
        detail=f"{count} points, max trace distance {worst:.3g}" + (f" at {worst_point}" if worst_point else ""),
    )


def check_limit_identities(quick: bool = False) -> CheckResult:
    params = ProtocolParams(alpha=1.5, T=0.99, x=0.7)
    point_mass = averaged_density(params, MismatchSpec(Delta=0.0))
    exact = np.array_equal(point_mass.entries, post_measurement_density(params).entries)

    general = analytic_branches(params)
    literal = equal_loss_branches(params)
    reduction = float(np.max(np.abs(general.weights[..., None] * general.vectors
                                    - literal.weights[..., None] * literal.vectors)))

    ideal_params = ProtocolParams(alpha=2.0, T=0.99)
    ideal = trace_distance(ideal_limit_density(ideal_params), post_measurement_density(ideal_params))
    return CheckResult(
        name="limit identities", category=REPRODUCTION,
        passed=exact and reduction < 1e-12 and ideal < 0.02,
        detail=f"Delta=0 exact: {exact}, equal-loss deviation {reduction:.2g}, ideal-limit distance {ideal:.3g}",
    )


def check_measure_suite(quick: bool = False) -> CheckResult:
    deviations = []
    for name in ("phi+", "phi-", "psi+", "psi-"):
        rho = DensityMatrix.from_pure(bell_state(name), (2, 2))
        deviations += [abs(negativity(rho) - 1.0), abs(linear_entropy(rho))]
    product = DensityMatrix.from_pure(np.kron([1.0, 1.0], [1.0, 0.0]), (2, 2))
    deviations.append(abs(negativity(product)))
    mixed = DensityMatrix(dims=(2, 2), entries=np.eye(4) / 4)
    deviations += [abs(fidelity(mixed, bell_state("phi+")) - 0.25), abs(linear_entropy(mixed) - 0.75)]
    worst = max(deviations)
    return CheckResult(
        name="measure suite", category=REPRODUCTION, passed=worst < 1e-10,
        detail=f"max deviation {worst:.2g}",
    )


def check_complementarity(quick: bool = False) -> CheckResult:
    """Reported only; the entropy minimum sits at the smallest alpha on these curves"""
    details = []
    for T, Delta in ((0.99, 0.01), (0.95, 0.01)):
        report = complementarity_report(_curve(T, Delta), T, Delta)
        details.append(
            f"T={T:g}, Delta={Delta:g}: max negativity at {report['alpha_max_negativity']:g}, "
            f"min linear entropy at {report['alpha_min_linear_entropy']:g} ({report['gap_steps']:.0f} steps)"
        )
    return CheckResult(name="entropy vs negativity", category=DIAGNOSTIC, passed=True, detail="; ".join(details))


CHECKS: List[Callable[[bool], CheckResult]] = [
    check_measure_suite,
    check_limit_identities,
    check_success_probability,
    check_no_loss_saturation,
    check_headline_mismatch,
    check_high_loss,
    check_fidelity_peaks,
    check_oracle_grid,
    check_complementarity,
]


def run_checks(quick: bool = False) -> List[CheckResult]:
    """
    Run every registered check, turning exceptions into failed results

    Args:
        quick: Use the reduced oracle grid

    Returns:
        One CheckResult per check, in registration order
    """
    results = []
    for check in CHECKS:
        logger.info(f"Running {check.__name__}")
        try:
            results.append(check(quick))
        except Exception as e:
            logger.error(f"{check.__name__} raised {e}", exc_info=True)
            category = ORACLE if check is check_oracle_grid else REPRODUCTION
            results.append(CheckResult(name=check.__name__, category=category, passed=False, detail=f"error: {e}"))
    return results


def exit_code(results: List[CheckResult]) -> int:
    """0 when every gated check passes, 2 for an oracle failure, 1 otherwise"""
    if any(not r.passed and r.category == ORACLE for r in results):
        return 2
    if any(not r.passed and r.category != DIAGNOSTIC for r in results):
        return 1
    return 0


def display_results(results: List[CheckResult]) -> None:
    table = Table(title="Verification")
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Detail")
    for r in results:
        status = "[blue]info[/blue]" if r.category == DIAGNOSTIC else ("[green]pass[/green]" if r.passed else "[red]FAIL[/red]")
        table.add_row(r.name, status, r.detail)
    console.print(table)
