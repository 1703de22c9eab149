"""Figure rendering for walk output, written to image files.

Every CLI report path can render a figure next to its delimited output;
the file format follows the path suffix (png, pdf, svg, ...).  Uses the
Agg backend so rendering works headless.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .dtqw import hadamard_walk_line, konno_density
from .timeseries import TimeSeries

__all__ = ["save_series_plot", "save_scan_plot", "save_line_walk_plot"]


def save_series_plot(series_list: list[TimeSeries], labels: list[str], path: str, title: str = "") -> None:
    """Plot one or more probability series against their common time axis."""
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    for series, label in zip(series_list, labels):
        ax.plot(series.times, series.probabilities, lw=1.4, label=label)
    ax.set_xlabel("time" if series_list[0].label == "t" else "step")
    ax.set_ylabel("probability at marked vertex")
    ax.set_ylim(-0.02, 1.02)
    ax.grid(alpha=0.3)
    if title:
        ax.set_title(title)
    if any(labels):
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_scan_plot(rows: list[tuple], path: str, time_label: str = "peak time") -> None:
    """Plot peak time and peak probability against instance size.

    ``rows`` are ``(N, reduced_dim, t_star, p_star)`` tuples.  The peak
    time panel is log-log with a square-root slope guide.
    """
    ns = np.array([row[0] for row in rows], dtype=np.float64)
    t_star = np.array([row[2] for row in rows], dtype=np.float64)
    p_star = np.array([row[3] for row in rows], dtype=np.float64)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.2, 4.2))
    ax1.loglog(ns, t_star, "o-", label=time_label)
    if t_star[0] > 0:
        ax1.loglog(ns, t_star[0] * np.sqrt(ns / ns[0]), "--", color="gray", label=r"$\sqrt{N}$ slope")
    ax1.set_xlabel("N")
    ax1.set_ylabel(time_label)
    ax1.grid(alpha=0.3, which="both")
    ax1.legend()
    ax2.semilogx(ns, p_star, "o-", color="tab:red")
    ax2.set_xlabel("N")
    ax2.set_ylabel("peak probability")
    ax2.set_ylim(0.0, 1.05)
    ax2.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_line_walk_plot(steps: int, path: str) -> None:
    """Plot the rescaled Hadamard-walk distribution against its limit density."""
    probs = hadamard_walk_line(steps)
    positions = np.arange(-steps, steps + 1)
    support = (positions + steps) % 2 == 0
    x = positions[support] / steps
    # Atoms sit on every other integer, so the density scale is n/2.
    rescaled = probs[support] * steps / 2.0
    grid = np.linspace(-0.75, 0.75, 1501)
    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(x, rescaled, lw=0.9, label=f"rescaled walk distribution (n={steps})")
    ax.plot(grid, konno_density(grid), "--", lw=1.4, label="limit density")
    ax.set_xlabel("position / n")
    ax.set_ylabel("density")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
