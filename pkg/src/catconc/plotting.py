"""Figure rendering for sweep output.

Imported lazily by the CLI so plain data runs never touch matplotlib.
"""

from __future__ import annotations

from collections.abc import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def save_ratio_figure(
    rows: Sequence[tuple[float, int, float, float, float, float, float]],
    path: str,
    alpha: float,
    n_copies: int,
) -> None:
    """Monotone ratios r2..r4 and their lower envelope against c."""
    data = np.asarray([row[2:] for row in rows], dtype=float)
    data[~np.isfinite(data)] = np.nan   # rank-1 catalyst rows have inf ratios
    c = data[:, 0]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for col, label, style in ((1, "r2", "-"), (2, "r3", "-"), (3, "r4", "-")):
        ax.plot(c, data[:, col], style, label=label, linewidth=1.2)
    ax.plot(c, data[:, 4], "k-", label="min", linewidth=2.2)
    baseline = min(1.0, 2.0 * (1.0 - alpha ** n_copies))
    ax.axhline(baseline, color="grey", linestyle="--", linewidth=1.0, label="no catalyst")
    peak = int(np.nanargmax(data[:, 4]))
    ax.axvline(c[peak], color="grey", linestyle=":", linewidth=1.0)
    ax.set_xlabel("catalyst weight c")
    ax.set_ylabel("monotone ratio")
    ax.set_ylim(0.0, 2.0)
    ax.set_title(f"alpha={alpha:g}, N={n_copies}")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_boost_figure(rows: Sequence[tuple[float, int, float]], path: str) -> None:
    """Optimal-catalyst boost against alpha, one curve per copy count."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for n in sorted({row[1] for row in rows}):
        pts = [(row[0], row[2]) for row in rows if row[1] == n]
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"N={n}", linewidth=1.4)
    ax.set_xlabel("alpha")
    ax.set_ylabel("boost over uncatalyzed")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
