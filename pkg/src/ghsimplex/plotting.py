"""Rendering sweep results to figure files."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence


def render_sweep_figure(rows: Sequence, path: str | Path, *, title: str | None = None) -> None:
    """Draw the curve lam -> bound and save it.

    Exact stretches appear as a line, uncertainty regions as a shaded band
    between the lower and upper bounds. The output format follows the file
    extension (png, pdf, svg).
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lams = [row.lam for row in rows]
    los = [row.bound.lo for row in rows]
    his = [row.bound.hi for row in rows]

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.fill_between(lams, los, his, alpha=0.25, color="tab:blue", label="bound interval")
    ax.plot(lams, los, color="tab:blue", lw=1.2, label="lower bound")
    ax.plot(lams, his, color="tab:blue", lw=1.2, ls="--", label="upper bound")
    exact_x = [row.lam for row in rows if row.bound.exact]
    exact_y = [row.bound.lo for row in rows if row.bound.exact]
    if exact_x:
        ax.plot(exact_x, exact_y, "o", color="tab:red", ms=3.5, label="exact")
    ax.set_xlabel("simplex side")
    ax.set_ylabel("doubled distance")
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.savefig(Path(path), dpi=150, bbox_inches="tight")
    plt.close(fig)
