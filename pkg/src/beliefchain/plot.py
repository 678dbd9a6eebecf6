"""Figure rendering for diagnosis reports.

Bars show final singleton masses in ranking order; a whisker extends each bar
to its plausibility. For a singleton, belief equals its own mass (no proper
non-empty subsets), so [bar end, whisker end] is the belief interval.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .engine import Diagnosis, rank_report


def _draw_ranking(ax, d: Diagnosis) -> None:
    rows = rank_report(d)
    # rank 1 at the top of the chart
    ys = range(len(rows) - 1, -1, -1)
    ax.barh(
        list(ys),
        [r.mass for r in rows],
        height=0.6,
        color="#4878a8",
        label="singleton mass",
    )
    for y, r in zip(ys, rows):
        ax.plot([r.mass, r.pl], [y, y], color="#222222", linewidth=1.2)
        ax.plot([r.pl, r.pl], [y - 0.18, y + 0.18], color="#222222", linewidth=1.2)
    ax.set_yticks(list(ys), [r.label for r in rows])
    ax.set_xlim(0.0, 1.0)
    ax.set_xlabel("mass (whisker to plausibility)")
    ax.set_title(f"condition {d.condition}: {len(d.symptoms)} symptom(s)")


def save_diagnosis_figure(d: Diagnosis, path: Path | str) -> Path:
    """One ranking chart for a single diagnosis."""
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    try:
        _draw_ranking(ax, d)
        fig.tight_layout()
        path = Path(path)
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    return path


def save_conditions_figure(diagnoses: list[Diagnosis], path: Path | str) -> Path:
    """Side-by-side ranking charts, one per diagnosis."""
    if not diagnoses:
        raise ValueError("no diagnoses to plot")
    fig, axes = plt.subplots(
        1, len(diagnoses), figsize=(3.4 * len(diagnoses), 3.6), squeeze=False
    )
    try:
        for ax, d in zip(axes[0], diagnoses):
            _draw_ranking(ax, d)
        fig.tight_layout()
        path = Path(path)
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    return path
