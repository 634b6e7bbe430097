"""
Report generator writing sweep results as CSV, JSON and SVG figures
"""

import csv
import logging
import os
from typing import Dict, List, Sequence

from matplotlib.figure import Figure

from hybrid_swap.sweep import SweepRecord, SweepSpec, select_curve
from .common import ensure_parent_dir, write_json_file

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["alpha", "T", "Delta", "negativity", "fidelity", "linear_entropy", "success_prob"]


def format_value(value: float) -> str:
    """12 significant digits"""
    return f"{value:.12g}"


def curve_gid(measure: str, Delta: float) -> str:
    return f"{measure}-Delta-{Delta:g}"


class ReportGenerator:
    """
    Writes sweep records to the formats requested by a SweepSpec
    """

    def __init__(self, spec: SweepSpec):
        self.spec = spec

    def emit(self, records: Sequence[SweepRecord]) -> List[str]:
        """Write every requested format; returns the paths written"""
        if not records:
            raise ValueError("No records to write")
        paths = []
        if "csv" in self.spec.formats:
            paths.append(self.write_csv(records, f"{self.spec.output}.csv"))
        if "json" in self.spec.formats:
            paths.append(self.write_json(records, f"{self.spec.output}.json"))
        if "svg" in self.spec.formats:
            for T in self.spec.transmissions:
                paths.append(self.write_svg(records, T, f"{self.spec.output}_T{T:g}.svg"))
        return paths

    def write_csv(self, records: Sequence[SweepRecord], path: str) -> str:
        try:
            ensure_parent_dir(path)
            with open(path, "w", newline="") as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(CSV_COLUMNS)
                for record in records:
                    writer.writerow([format_value(getattr(record, column)) for column in CSV_COLUMNS])
        except OSError as e:
            raise ValueError(f"Cannot write CSV to '{path}': {e}")
        logger.info(f"Wrote {len(records)} records to {path}")
        return path

    def write_json(self, records: Sequence[SweepRecord], path: str) -> str:
        if not write_json_file(path, [record.model_dump() for record in records]):
            raise ValueError(f"Cannot write JSON to '{path}'")
        return path

    def write_svg(self, records: Sequence[SweepRecord], T: float, path: str) -> str:
        """Negativity and linear entropy against alpha, one line per Delta"""
        figure = Figure(figsize=(10, 4))
        negativity_axes, entropy_axes = figure.subplots(1, 2)
        label = "delta" if self.spec.fixed_delta is not None else "Delta"

        for Delta in self.spec.width_values:
            curve = select_curve(records, T, Delta)
            if not curve:
                continue
            alphas = [r.alpha for r in curve]
            (line,) = negativity_axes.plot(alphas, [r.negativity for r in curve], label=f"{label}={Delta:g}")
            line.set_gid(curve_gid("negativity", Delta))
            (line,) = entropy_axes.plot(alphas, [r.linear_entropy for r in curve], label=f"{label}={Delta:g}")
            line.set_gid(curve_gid("linear-entropy", Delta))

        negativity_axes.set_xlabel("alpha")
        negativity_axes.set_ylabel("negativity")
        entropy_axes.set_xlabel("alpha")
        entropy_axes.set_ylabel("linear entropy")
        negativity_axes.set_title(f"T = {T:g}")
        negativity_axes.legend()
        figure.tight_layout()

        try:
            ensure_parent_dir(path)
            figure.savefig(path, format="svg")
        except OSError as e:
            raise ValueError(f"Cannot write SVG to '{path}': {e}")
        logger.info(f"Wrote figure for T={T:g} to {path}")
        return path


def emit_outputs(records: Sequence[SweepRecord], spec: SweepSpec) -> List[str]:
    return ReportGenerator(spec).emit(records)


def read_csv_records(path: str) -> List[SweepRecord]:
    """Parse a CSV written by write_csv back into records"""
    if not os.path.exists(path):
        raise ValueError(f"CSV file not found: {path}")
    with open(path, newline="") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != CSV_COLUMNS:
            raise ValueError(f"Unexpected CSV header {reader.fieldnames}")
        rows: List[Dict[str, str]] = list(reader)
    return [SweepRecord(**{column: float(row[column]) for column in CSV_COLUMNS}) for row in rows]
