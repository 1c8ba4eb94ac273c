"""Figure rendering for sweep reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_XLABELS = {
    "eq20": "x",
    "ghz-like": "$|a|^2$",
}


def render_sweep(rows: list[dict[str, float]], family: str, path) -> None:
    """Line plot of the swept measure, written to ``path``."""
    xs = [row["x"] for row in rows]
    ys = [row["egf"] for row in rows]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.plot(xs, ys, lw=1.6)
    ax.set_xlabel(_XLABELS.get(family, "x"))
    ax.set_ylabel("generalized entanglement of formation")
    ax.set_title(f"{family} sweep ({len(rows)} points)")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(Path(path), dpi=150)
    plt.close(fig)
