"""Parameter sweeps over (alpha, T, Delta) grids"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hybrid_swap.errors import OracleMismatchError
from hybrid_swap.fock import trace_distance
from hybrid_swap.measures import evaluate_measures
from hybrid_swap.mismatch import MismatchSpec, averaged_density, averaged_success_probability
from hybrid_swap.protocol import (
    ProtocolParams,
    oracle_density,
    post_measurement_density,
    success_probability,
)
from hybrid_swap.utils.config_manager import ConfigManager, parse_bool, parse_float_list

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = {"csv", "json", "svg"}
GRID_DECIMALS = 12


class SweepRecord(BaseModel):
    """One grid point of a sweep"""

    model_config = ConfigDict(frozen=True)

    alpha: float
    T: float
    Delta: float = Field(..., description="Mismatch width, or the fixed mismatch delta in fixed-delta sweeps")
    negativity: float = Field(..., ge=0.0, le=1.0)
    fidelity: float = Field(..., ge=0.0, le=1.0)
    linear_entropy: float = Field(..., ge=0.0, le=0.75)
    success_prob: float = Field(..., ge=0.0, le=1.0)


class SweepSpec(BaseModel):
    """Grid, output and numerics settings of one sweep"""

    model_config = ConfigDict(frozen=True)

    alpha_start: float = Field(0.0, ge=0.0)
    alpha_stop: float = Field(4.0, ge=0.0)
    alpha_step: float = Field(0.05, gt=0.0)
    transmissions: List[float] = Field(default_factory=lambda: [1.0, 0.99, 0.95], min_length=1)
    mismatch_widths: List[float] = Field(default_factory=lambda: [0.0, 0.001, 0.01, 0.1], min_length=1)
    fixed_delta: Optional[float] = Field(None, ge=0.0, description="Use this mismatch directly instead of averaging")
    formats: Set[str] = Field(default_factory=lambda: {"csv"})
    output: str = Field("results/sweep", description="Output path without extension")
    oracle_check: bool = False
    oracle_stride: int = Field(10, ge=1)
    oracle_tolerance: float = Field(1e-8, gt=0.0)
    quad_points: int = Field(64, ge=2)
    epsilon_branch: float = Field(1e-14, gt=0.0, lt=1.0)
    epsilon_trunc: float = Field(1e-12, gt=0.0, lt=1.0)
    strict_truncation: bool = True
    x: float = 0.0
    theta: float = math.pi / 2
    phase_corrected: bool = True

    @field_validator("transmissions")
    @classmethod
    def _check_transmissions(cls, value: List[float]) -> List[float]:
        for T in value:
            if not 0.0 < T <= 1.0:
                raise ValueError(f"Transmission {T} outside (0, 1]")
        return value

    @field_validator("mismatch_widths")
    @classmethod
    def _check_widths(cls, value: List[float]) -> List[float]:
        for Delta in value:
            if Delta < 0.0 or not math.isfinite(Delta):
                raise ValueError(f"Mismatch width {Delta} must be finite and >= 0")
        return value

    @field_validator("formats")
    @classmethod
    def _check_formats(cls, value: Set[str]) -> Set[str]:
        unknown = set(value) - OUTPUT_FORMATS
        if unknown:
            raise ValueError(f"Unknown output formats {sorted(unknown)}; choose from {sorted(OUTPUT_FORMATS)}")
        return set(value)

    @model_validator(mode="after")
    def _check_grid(self) -> "SweepSpec":
        span = self.alpha_stop - self.alpha_start
        if span < 0:
            raise ValueError(f"alpha_stop={self.alpha_stop} is below alpha_start={self.alpha_start}")
        if self.alpha_step > span:
            raise ValueError(f"alpha_step={self.alpha_step} exceeds the alpha range {span:g}")
        if self.fixed_delta is not None and self.fixed_delta >= min(self.transmissions):
            raise ValueError(f"fixed_delta={self.fixed_delta} must be below every transmission")
        return self

    @property
    def alpha_grid(self) -> Tuple[float, float, float]:
        return self.alpha_start, self.alpha_stop, self.alpha_step

    @property
    def width_values(self) -> List[float]:
        return [self.fixed_delta] if self.fixed_delta is not None else list(self.mismatch_widths)

    def alpha_values(self) -> List[float]:
        count = int(math.floor((self.alpha_stop - self.alpha_start) / self.alpha_step + 1e-9)) + 1
        return [round(self.alpha_start + k * self.alpha_step, GRID_DECIMALS) for k in range(count)]

    def grid(self) -> List[Tuple[float, float, float]]:
        """(alpha, T, Delta) triples, alpha-major, then T, then Delta"""
        return [(a, T, D) for a in self.alpha_values() for T in self.transmissions for D in self.width_values]

    @classmethod
    def from_config(
        cls,
        config_manager: Optional[ConfigManager] = None,
        run_config: Optional[Dict[str, Any]] = None,
        overrides: Optional[Dict[str, Any]] = None,
    ) -> "SweepSpec":
        """
        Build a spec from project defaults < run-config file < command-line overrides.

        Args:
            config_manager: Source of project defaults; a fresh ConfigManager if None
            run_config: Raw strings keyed like the CLI flags, from a run-config file
            overrides: Already-typed values, where None means "not given"

        Returns:
            Validated SweepSpec

        Raises:
            ValueError: for unknown run-config keys, unparsable values or an invalid grid
        """
        config_manager = config_manager or ConfigManager()
        sweep = config_manager.get_sweep_settings()
        numerics = config_manager.get_numerics()
        protocol = config_manager.get_protocol_defaults()

        values: Dict[str, Any] = {
            "alpha_start": sweep["alpha_start"],
            "alpha_stop": sweep["alpha_stop"],
            "alpha_step": sweep["alpha_step"],
            "transmissions": sweep["transmissions"],
            "mismatch_widths": sweep["mismatch_widths"],
            "formats": set(sweep["formats"]),
            "output": sweep["output"],
            "oracle_stride": numerics["oracle_stride"],
            "oracle_tolerance": numerics["oracle_tolerance"],
            "quad_points": numerics["quad_points"],
            "epsilon_branch": numerics["epsilon_branch"],
            "epsilon_trunc": numerics["epsilon_trunc"],
            "strict_truncation": numerics["strict_truncation"],
            "x": protocol["x"],
            "theta": protocol["theta"],
            "phase_corrected": protocol["phase_corrected"],
        }
        values.update(_parse_run_config(run_config or {}))
        values.update({key: value for key, value in (overrides or {}).items() if value is not None})
        return cls(**values)


_RUN_CONFIG_KEYS = {
    "alpha_start": ("alpha_start", float),
    "alpha_stop": ("alpha_stop", float),
    "alpha_step": ("alpha_step", float),
    "transmission": ("transmissions", parse_float_list),
    "transmissions": ("transmissions", parse_float_list),
    "mismatch_width": ("mismatch_widths", parse_float_list),
    "mismatch_widths": ("mismatch_widths", parse_float_list),
    "fixed_delta": ("fixed_delta", float),
    "out": ("output", str),
    "output": ("output", str),
    "format": ("formats", lambda v: {part.strip() for part in str(v).split(",") if part.strip()}),
    "oracle_check": ("oracle_check", parse_bool),
    "oracle_stride": ("oracle_stride", int),
    "quad_points": ("quad_points", int),
    "epsilon_trunc": ("epsilon_trunc", float),
    "strict_truncation": ("strict_truncation", parse_bool),
    "x": ("x", float),
    "theta": ("theta", float),
    "phase_corrected": ("phase_corrected", parse_bool),
}


def _parse_run_config(settings: Dict[str, Any]) -> Dict[str, Any]:
    parsed: Dict[str, Any] = {}
    for key, raw in settings.items():
        if key in ("workers", "config"):
            continue
        if key not in _RUN_CONFIG_KEYS:
            raise ValueError(f"Unknown run configuration key '{key}'")
        field, convert = _RUN_CONFIG_KEYS[key]
        try:
            parsed[field] = convert(raw)
        except ValueError as e:
            raise ValueError(f"Invalid value for '{key}': {e}")
    return parsed


def _point_params(alpha: float, T: float, delta: float, spec: SweepSpec) -> ProtocolParams:
    return ProtocolParams(
        alpha=alpha,
        T=T,
        delta=delta,
        x=spec.x,
        theta=spec.theta,
        phase_corrected=spec.phase_corrected,
        epsilon_branch=spec.epsilon_branch,
        epsilon_trunc=spec.epsilon_trunc,
        strict_truncation=spec.strict_truncation,
    )


def evaluate_point(alpha: float, T: float, Delta: float, spec: SweepSpec) -> SweepRecord:
    """
    Measures at one grid point

    Args:
        alpha: Coherent amplitude
        T: Transmission of the first channel
        Delta: Mismatch width, or the fixed mismatch when spec.fixed_delta is set
        spec: Sweep settings supplying the protocol and quadrature knobs

    Returns:
        SweepRecord with negativity, fidelity, linear entropy and success probability
    """
    if spec.fixed_delta is not None:
        params = _point_params(alpha, T, Delta, spec)
        rho = post_measurement_density(params)
        success = success_probability(params)
    else:
        params = _point_params(alpha, T, 0.0, spec)
        mismatch = MismatchSpec(Delta=Delta, quad_points=spec.quad_points)
        rho = averaged_density(params, mismatch)
        success = averaged_success_probability(params, mismatch)

    measures = evaluate_measures(rho, success)
    return SweepRecord(
        alpha=alpha,
        T=T,
        Delta=Delta,
        negativity=measures.negativity,
        fidelity=measures.fidelity,
        linear_entropy=measures.linear_entropy,
        success_prob=measures.success_prob,
    )


def oracle_check_point(alpha: float, T: float, Delta: float, spec: SweepSpec) -> float:
    """
    Trace distance between the analytic and circuit states at one grid point.

    Averaged points are checked at delta = Delta, the typical mismatch of the
    distribution, when that is a valid mismatch for T; otherwise at delta = 0.
    """
    delta = Delta if Delta < T else 0.0
    params = _point_params(alpha, T, delta, spec)
    return trace_distance(post_measurement_density(params), oracle_density(params))


def _evaluate_task(task: Tuple[int, float, float, float, SweepSpec]) -> Tuple[SweepRecord, Optional[float]]:
    index, alpha, T, Delta, spec = task
    record = evaluate_point(alpha, T, Delta, spec)
    distance = None
    if spec.oracle_check and index % spec.oracle_stride == 0:
        distance = oracle_check_point(alpha, T, Delta, spec)
    return record, distance


def run_sweep(spec: SweepSpec, workers: int = 1) -> List[SweepRecord]:
    """
    Evaluate every grid point in deterministic grid order.

    With oracle_check on, every oracle_stride-th point is recomputed by the
    Fock-space circuit.

    Args:
        spec: Grid, numerics and oracle settings of the sweep
        workers: Number of worker processes; 1 evaluates in this process

    Returns:
        One SweepRecord per grid point, alpha-major then T then Delta

    Raises:
        ValueError: if workers is below 1
        OracleMismatchError: if a checked point exceeds oracle_tolerance
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    tasks = [(index, a, T, D, spec) for index, (a, T, D) in enumerate(spec.grid())]
    logger.info(f"Sweeping {len(tasks)} grid points with {workers} worker(s)")

    # Results come back in task order from both paths
    if workers == 1:
        results = [_evaluate_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_evaluate_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))

    records = []
    for (index, alpha, T, Delta, _), (record, distance) in zip(tasks, results):
        if distance is not None:
            logger.debug(f"Oracle check at alpha={alpha}, T={T}, Delta={Delta}: trace distance {distance:.3g}")
            if not distance < spec.oracle_tolerance:
                raise OracleMismatchError(
                    f"Oracle mismatch at alpha={alpha}, T={T}, Delta={Delta}: trace distance {distance:.3g} "
                    f"exceeds {spec.oracle_tolerance:g}",
                    grid_point={"alpha": alpha, "T": T, "Delta": Delta},
                    distance=distance,
                )
        records.append(record)
    return records


def select_curve(records: Sequence[SweepRecord], T: float, Delta: float) -> List[SweepRecord]:
    curve = [r for r in records if math.isclose(r.T, T) and math.isclose(r.Delta, Delta, abs_tol=1e-15)]
    return sorted(curve, key=lambda r: r.alpha)


def find_peak(records: Sequence[SweepRecord], T: float, Delta: float) -> SweepRecord:
    """Record with the largest negativity on one (T, Delta) curve"""
    curve = select_curve(records, T, Delta)
    if not curve:
        raise ValueError(f"No records for T={T}, Delta={Delta}")
    return curve[int(np.argmax([r.negativity for r in curve]))]


def complementarity_report(
    records: Sequence[SweepRecord], T: float, Delta: float, alpha_min: float = 0.5
) -> Dict[str, float]:
    """Compare the alpha maximizing negativity with the alpha minimizing linear entropy"""
    curve = [r for r in select_curve(records, T, Delta) if r.alpha >= alpha_min]
    if len(curve) < 2:
        raise ValueError(f"Need at least two records with alpha >= {alpha_min} for T={T}, Delta={Delta}")
    peak = curve[int(np.argmax([r.negativity for r in curve]))]
    least_mixed = curve[int(np.argmin([r.linear_entropy for r in curve]))]
    step = curve[1].alpha - curve[0].alpha
    return {
        "T": T,
        "Delta": Delta,
        "alpha_max_negativity": peak.alpha,
        "alpha_min_linear_entropy": least_mixed.alpha,
        "gap_steps": abs(peak.alpha - least_mixed.alpha) / step,
    }
