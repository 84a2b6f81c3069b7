"""Profile figures rendered to files alongside the textual reports."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_profile_figure(
    prof: Sequence[int],
    maxima: Sequence[int],
    minima: Sequence[int],
    path: str | Path,
    title: str = "",
) -> Path:
    """Plot a boundary-length profile with its local extrema marked."""
    path = Path(path)
    xs = list(range(1, len(prof) + 1))
    fig, ax = plt.subplots(figsize=(7.0, 3.2))
    ax.plot(xs, list(prof), "-o", color="#444444", linewidth=1.2, markersize=4)
    if maxima:
        ax.plot(list(maxima), [prof[k - 1] for k in maxima], "^",
                color="crimson", markersize=9, linestyle="none", label="local maxima")
    if minima:
        ax.plot(list(minima), [prof[k - 1] for k in minima], "v",
                color="royalblue", markersize=9, linestyle="none", label="local minima")
    ax.axhline(3, color="#bbbbbb", linestyle=":", linewidth=1)
    ax.set_xlabel("faces placed")
    ax.set_ylabel("boundary length")
    if title:
        ax.set_title(title)
    if maxima or minima:
        ax.legend(loc="upper right", fontsize=8)
    ax.set_ylim(bottom=2.5)
    if len(xs) <= 30:
        ax.set_xticks(xs)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
