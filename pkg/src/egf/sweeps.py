"""One-parameter state families swept by the CLI.

``eq20`` is a fixed benchmark family over x in [0, sqrt(2)] whose first two
amplitudes trade weight while staying normalized; ``ghz-like`` interpolates
a|000> + h|111> with x = |a|^2 in [0, 1], where the measure equals the
binary entropy of x.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import numpy as np

from egf.qlinalg import PureState
from egf.tripartite import egf_closed_form

FAMILIES = ("eq20", "ghz-like")

_REPORT_KEYS = (
    "p1_AB", "p2_AB", "p1_AC", "p2_AC", "p1_BC", "p2_BC",
    "xi1_AB", "xi2_AB", "xi1_AC", "xi2_AC", "xi1_BC", "xi2_BC",
    "lambda_AB", "lambda_AC", "lambda_BC",
    "xi_A", "xi_B", "xi_C",
    "ef_AB", "ef_AC", "ef_BC",
    "s_AB", "s_AC", "s_BC",
    "s_A", "s_B", "s_C",
)

CSV_COLUMNS = ("x", "egf") + _REPORT_KEYS


def family_domain(family: str) -> tuple[float, float]:
    if family == "eq20":
        return (0.0, math.sqrt(2.0))
    if family == "ghz-like":
        return (0.0, 1.0)
    raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")


def family_state(family: str, x: float) -> PureState:
    """Member of a sweep family at parameter value ``x``."""
    lo, hi = family_domain(family)
    if family == "eq20":
        radicand = 2.0 - x * x
        if x < -1e-12 or radicand < -1e-12:
            raise ValueError(f"parameter {x!r} outside [0, sqrt(2)]")
        amps = np.array(
            [
                x / 3.0,
                math.sqrt(max(radicand, 0.0)) / 3.0,
                1.0 / 3.0,
                0.0,
                0.0,
                1.0 / math.sqrt(6.0),
                1.0 / math.sqrt(6.0),
                1.0 / math.sqrt(3.0),
            ],
            dtype=complex,
        )
        return PureState(3, amps)
    if x < lo - 1e-12 or x > hi + 1e-12:
        raise ValueError(f"parameter {x!r} outside [{lo}, {hi}]")
    x = min(max(x, 0.0), 1.0)
    amps = np.zeros(8, dtype=complex)
    amps[0] = math.sqrt(x)
    amps[7] = math.sqrt(1.0 - x)
    return PureState(3, amps)


def sweep_rows(family: str, points: int) -> list[dict[str, float]]:
    """Uniform sweep over the family domain; one dict per row."""
    if points < 2:
        raise ValueError(f"need at least 2 points, got {points}")
    lo, hi = family_domain(family)
    rows = []
    for i in range(points):
        x = lo + (hi - lo) * i / (points - 1)
        report = egf_closed_form(family_state(family, x)).as_dict()
        row = {"x": x, "egf": report["egf"]}
        for key in _REPORT_KEYS:
            row[key] = report[key]
        rows.append(row)
    return rows


def write_sweep_csv(path, family: str, points: int) -> list[dict[str, float]]:
    """Write the sweep as CSV ('.' decimals, ',' separators, LF endings)."""
    rows = sweep_rows(family, points)
    with open(Path(path), "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(f"{row[key]:.17g}" for key in CSV_COLUMNS)
    return rows
