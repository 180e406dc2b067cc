"""
Grid sweeps over (r_b, r_c) and rendering of single-point reports.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Literal

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator

from unruh.config import DEFAULT_GRID_N, MAX_GRID_N, SWEEP_SCHEMA_LINE
from unruh.model import AccelPair, accel_grid
from unruh.resolver import QUANTITIES, column_getters, resolve_quantities
from unruh.tangles import PAIRS, TangleReport, build_report

logger = logging.getLogger(__name__)


class SweepConfig(BaseModel):
    """Settings for one sweep file."""

    model_config = ConfigDict(frozen=True)

    grid_n: int = Field(default=DEFAULT_GRID_N, ge=2, le=MAX_GRID_N)
    output_format: Literal["csv", "json"] = "csv"
    output_path: Path
    quantities: tuple[str, ...] = Field(min_length=1)
    workers: int = Field(default=1, ge=1)

    @field_validator("quantities", mode="after")
    @classmethod
    def _known(cls, v: tuple[str, ...]) -> tuple[str, ...]:
        return resolve_quantities(v)


def format_float(x: float) -> str:
    """Shortest of %.15g / %.17g that reads back to the same float."""
    text = format(x, ".15g")
    if float(text) != x:
        text = format(x, ".17g")
    return text


def evaluate_grid(points: list[AccelPair], workers: int = 1) -> list[TangleReport]:
    """Reports for every point, in the order of points regardless of worker count."""
    if workers <= 1:
        return [build_report(p) for p in points]
    chunksize = max(1, len(points) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order
        return list(pool.map(build_report, points, chunksize=chunksize))


def run_sweep(config: SweepConfig) -> pd.DataFrame:
    """One row per grid point: r_b, r_c, then the requested quantity columns."""
    points = accel_grid(config.grid_n)
    logger.debug("Sweeping %d points with %d worker(s)", len(points), config.workers)
    reports = evaluate_grid(points, config.workers)

    getters = column_getters(config.quantities)
    records = []
    for report in reports:
        row = {"r_b": report.params.r_b, "r_c": report.params.r_c}
        for column, getter in getters.items():
            row[column] = float(getter(report))
        records.append(row)

    df = pd.DataFrame(records, columns=["r_b", "r_c", *getters])
    df.attrs["grid_n"] = config.grid_n
    df.attrs["quantities"] = list(config.quantities)
    return df


def write_csv(df: pd.DataFrame, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(SWEEP_SCHEMA_LINE + "\n")
        df.to_csv(f, index=False, lineterminator="\n", float_format=format_float)


def write_json(df: pd.DataFrame, path: Path, grid_n: int, quantities: tuple[str, ...]) -> None:
    payload = {
        "schema": SWEEP_SCHEMA_LINE.lstrip("# "),
        "grid_n": grid_n,
        "quantities": list(quantities),
        "rows": df.to_dict(orient="records"),
    }
    with open(path, "w", encoding="utf-8", newline="") as f:
        json.dump(payload, f, indent=1)
        f.write("\n")


def write_sweep(df: pd.DataFrame, config: SweepConfig) -> Path:
    """Write the sweep in the configured format. OSError propagates to the caller."""
    path = Path(config.output_path)
    if config.output_format == "csv":
        write_csv(df, path)
    else:
        write_json(df, path, config.grid_n, config.quantities)
    print(f"Wrote {len(df)} rows to {path}")
    return path


def report_table(report: TangleReport) -> pd.DataFrame:
    """Every field of a report as (quantity, value) rows."""
    rows = [("r_b", report.params.r_b), ("r_c", report.params.r_c)]
    for info in QUANTITIES.values():
        for column, getter in info["columns"].items():
            rows.append((column, getter(report)))
    for (alpha, beta), value in zip(PAIRS, report.two_tangles):
        rows.append((f"two_tangle_{alpha}_{beta}", value))
    return pd.DataFrame(
        [(name, format_float(float(value))) for name, value in rows],
        columns=["quantity", "value"],
    )


def print_report(report: TangleReport) -> None:
    """Print a report in a tidy format."""
    print(f"\n{'='*80}")
    print(f"Tangle report at r_b={format_float(report.params.r_b)}, r_c={format_float(report.params.r_c)}")
    print(f"{'='*80}")
    print(report_table(report).to_string(index=False))
    print(f"{'='*80}\n")
